"""Exception hierarchy for formpolar.

Every error raised by the library derives from :class:`FormPolarError`, so
callers (notably the CLI) can catch one type and report a clean failure.
"""


class FormPolarError(Exception):
    """Base class for all formpolar errors."""


class NotSymmetricError(FormPolarError):
    """Input expected to be symmetric (or Hermitian) is not, beyond tolerance."""


class NotPositiveSemidefiniteError(FormPolarError):
    """A leading minor is negative beyond tolerance."""


class NotPositiveDefiniteError(FormPolarError):
    """Input fails the Sylvester positive definiteness criterion."""


class NotSpecialOrthogonalError(FormPolarError):
    """Input is not orthogonal with determinant +1 within tolerance."""


class DimensionMismatchError(FormPolarError):
    """Matrix shape does not match the bilinear form."""


class UnsupportedFormError(FormPolarError):
    """The requested operation is not defined for this bilinear form."""


class NotInGroupError(FormPolarError):
    """X^T M X - M has norm beyond tolerance."""


class NotPosDefInGroupError(NotInGroupError):
    """Input is in the group but not positive definite (or vice versa)."""


class NotOrthogonalInGroupError(NotInGroupError):
    """Input is not an orthogonal member of the group."""


class NotSymmetricRepError(FormPolarError):
    """Coefficient representation has a nonzero antisymmetric part."""


class DegenerateBlockError(FormPolarError):
    """A classifying determinant sits inside the sign dead zone."""


class HyperbolicConstraintError(FormPolarError):
    """A^2 - I (or D^2 - I) has a negative eigenvalue beyond tolerance."""


class NoPositiveBranchError(FormPolarError):
    """No square-root sign choice yields positive diagonal preimage entries."""


class NoSolutionError(FormPolarError):
    """Neither rotation nor reflection branch solves the factor equation."""


class InternalConsistencyError(FormPolarError):
    """Intermediate identities failed; input was not in the group to working
    precision."""


class SingularMatrixError(FormPolarError):
    """Matrix is singular beyond tolerance."""


class ConvergenceError(FormPolarError):
    """Iteration exceeded its sweep or step budget."""


class UnitDeterminantError(FormPolarError):
    """Determinant is not 1 within tolerance."""


class InputParseError(FormPolarError):
    """Input text could not be parsed as a matrix."""
