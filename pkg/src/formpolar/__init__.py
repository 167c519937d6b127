"""Polar decomposition and quaternion-pair representations for the 4x4
matrix groups preserving a bilinear form, without eigendecompositions on the
main path.

The central objects are the sixteen basis forms generated by quaternion
pairs (including the split signature, the symplectic form, the flip and the
reversed identity), plus the Minkowski signature.  The package factors group
elements into orthogonal times positive definite, completes single blocks to
positive definite group elements, takes explicit logarithms, classifies
connected components, and moves between the Lorentz group and its double
cover.
"""

from .completion import (
    complete_given_A,
    complete_given_B,
    complete_given_D,
    intertwining_residual,
    log_posdef_gnn,
    posdef_sqrt,
)
from .errors import FormPolarError
from .forms import (
    BlockReport,
    ComponentLabel,
    Form,
    INN_COMPONENTS,
    MINKOWSKI_COMPONENTS,
    component_of,
    component_prefix,
    form_matrix,
    group_inverse,
    is_in_group,
    is_posdef_in_group,
    membership_residual,
    parse_form,
    symmetric_block_report,
)
from .linalg import (
    cholesky_lower_2x2,
    hermitian_posdef_sqrt_2x2,
    posdef_sqrt_2x2,
    reflection_2x2,
    rotation_2x2,
    svd_2x2,
)
from .lorentz import (
    LorentzRep,
    boost_rep_from_preimage,
    covering_phi,
    invert_phi_posdef,
    polar_in_lorentz,
    rep_lorentz,
    so22_cover_phi,
)
from .polar import PolarFactors, polar_in_basis_form, polar_in_form, polar_in_g22, theta_solve
from .quat import (
    QuatTensorRep,
    basis_matrix,
    product_tensor_matrix,
    quat_conj,
    quat_mul,
    rep_of_matrix,
    rotation_to_unit_pair,
    similarity_to_canonical,
)
from .reps import (
    OrthogonalRep,
    check_fpi_equations,
    check_symplectic_symmetric,
    reconstruct_g22,
    rep_g22,
    rep_orthogonal_g22,
    rep_posdef_g22,
)

__version__ = "0.1.0"

__all__ = [
    "BlockReport",
    "ComponentLabel",
    "Form",
    "FormPolarError",
    "INN_COMPONENTS",
    "LorentzRep",
    "MINKOWSKI_COMPONENTS",
    "OrthogonalRep",
    "PolarFactors",
    "QuatTensorRep",
    "basis_matrix",
    "boost_rep_from_preimage",
    "check_fpi_equations",
    "check_symplectic_symmetric",
    "cholesky_lower_2x2",
    "complete_given_A",
    "complete_given_B",
    "complete_given_D",
    "component_of",
    "component_prefix",
    "covering_phi",
    "form_matrix",
    "group_inverse",
    "hermitian_posdef_sqrt_2x2",
    "intertwining_residual",
    "invert_phi_posdef",
    "is_in_group",
    "is_posdef_in_group",
    "log_posdef_gnn",
    "membership_residual",
    "parse_form",
    "polar_in_basis_form",
    "polar_in_form",
    "polar_in_g22",
    "polar_in_lorentz",
    "posdef_sqrt",
    "posdef_sqrt_2x2",
    "product_tensor_matrix",
    "quat_conj",
    "quat_mul",
    "reconstruct_g22",
    "reflection_2x2",
    "rep_g22",
    "rep_lorentz",
    "rep_of_matrix",
    "rep_orthogonal_g22",
    "rep_posdef_g22",
    "rotation_2x2",
    "rotation_to_unit_pair",
    "similarity_to_canonical",
    "so22_cover_phi",
    "svd_2x2",
    "symmetric_block_report",
    "theta_solve",
]
