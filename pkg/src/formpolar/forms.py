"""Bilinear forms, group membership, block criteria and components.

A :class:`Form` names an invertible matrix M; the associated group is
``G_M = {X : X^T M X = M}``.  Supported forms are the sixteen quaternion
pair basis matrices, the signature matrices I_{p,q} (with the Minkowski
signature I_{1,3} singled out), and the 2n-dimensional symplectic, flip and
reversed-identity (K) families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quat
from .errors import (
    DegenerateBlockError,
    DimensionMismatchError,
    NotInGroupError,
    NotSymmetricError,
    UnsupportedFormError,
)
from .linalg import check_symmetric, fro, scale_of, sylvester_is_posdef

DEFAULT_MEMBERSHIP_TOL = 1e-10

_SIGMA_Z = np.diag([1.0, -1.0])


def _flip(n: int) -> np.ndarray:
    return np.fliplr(np.eye(n))


@dataclass(frozen=True)
class Form:
    """A named bilinear form; ``params`` depend on ``kind``."""

    kind: str
    params: tuple = ()

    @staticmethod
    def basis(left: str, right: str) -> "Form":
        if left not in quat.BASIS_UNITS or right not in quat.BASIS_UNITS:
            raise UnsupportedFormError(f"unknown basis pair ({left}, {right})")
        return Form("basis", (left, right))

    @staticmethod
    def ipq(p: int, q: int) -> "Form":
        if p < 0 or q < 0 or p + q == 0:
            raise UnsupportedFormError(f"invalid signature ({p}, {q})")
        return Form("ipq", (p, q))

    @staticmethod
    def minkowski() -> "Form":
        return Form("minkowski")

    @staticmethod
    def symplectic(n: int) -> "Form":
        return Form("symplectic", (n,))

    @staticmethod
    def flip(n: int) -> "Form":
        return Form("flip", (n,))

    @staticmethod
    def k(n: int) -> "Form":
        return Form("k", (n,))

    @property
    def dim(self) -> int:
        if self.kind == "basis":
            return 4
        if self.kind == "minkowski":
            return 4
        if self.kind == "ipq":
            return self.params[0] + self.params[1]
        return 2 * self.params[0]

    @property
    def name(self) -> str:
        if self.kind == "basis":
            return "".join(self.params)
        if self.kind == "minkowski":
            return "minkowski"
        if self.kind == "ipq":
            return f"i{self.params[0]}{self.params[1]}"
        return f"{self.kind}{self.dim}"

    def matrix(self) -> np.ndarray:
        return form_matrix(self)


_ALIASES = {
    "o4": Form.basis("1", "1"),
    "i22": Form.ipq(2, 2),
    "sp4": Form.symplectic(2),
    "symplectic4": Form.symplectic(2),
    "flip4": Form.flip(2),
    "k4": Form.k(2),
    "i13": Form.minkowski(),
    "minkowski": Form.minkowski(),
    "i31": Form.ipq(3, 1),
}


def parse_form(name: str) -> Form:
    """Resolve a CLI form name (basis pair like 'ij', or an alias)."""
    key = name.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]
    if len(key) == 2 and all(ch in quat.BASIS_UNITS for ch in key):
        return Form.basis(key[0], key[1])
    raise UnsupportedFormError(f"unknown form name {name!r}")


def form_matrix(form: Form) -> np.ndarray:
    """The matrix M of the bilinear form."""
    if form.kind == "basis":
        return quat.basis_matrix(*form.params)
    if form.kind == "minkowski":
        return np.diag([1.0, -1.0, -1.0, -1.0])
    if form.kind == "ipq":
        p, q = form.params
        return np.diag([1.0] * p + [-1.0] * q)
    n = form.params[0]
    if form.kind == "symplectic":
        z = np.zeros((n, n))
        return np.block([[z, np.eye(n)], [-np.eye(n), z]])
    if form.kind == "flip":
        return _flip(2 * n)
    if form.kind == "k":
        z = np.zeros((n, n))
        return np.block([[z, np.eye(n)], [np.eye(n), z]])
    raise UnsupportedFormError(f"unknown form kind {form.kind!r}")


# the eighteen distinct form matrices reported by the CLI `identify` command:
# the sixteen basis pairs plus the two Lorentz-type signatures
IDENTIFY_FORMS: dict[str, Form] = {
    **{
        e + f: Form.basis(e, f)
        for e in quat.BASIS_UNITS
        for f in quat.BASIS_UNITS
    },
    "minkowski": Form.minkowski(),
    "i31": Form.ipq(3, 1),
}


def membership_residual(X, form: Form) -> float:
    """||X^T M X - M||_F."""
    X = np.asarray(X, dtype=float)
    M = form_matrix(form)
    if X.shape != M.shape:
        raise DimensionMismatchError(
            f"matrix shape {X.shape} does not match form {form.name} ({M.shape})"
        )
    return fro(X.T @ M @ X - M)


def is_in_group(X, form: Form, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    """Membership test at tolerance ``tol * max(1, ||M||)``."""
    M = form_matrix(form)
    return membership_residual(X, form) <= tol * scale_of(M)


def require_in_group(X, form: Form, tol: float = DEFAULT_MEMBERSHIP_TOL) -> None:
    res = membership_residual(X, form)
    if res > tol * scale_of(form_matrix(form)):
        raise NotInGroupError(
            f"not in G_{form.name}: residual {res:.3e} exceeds tolerance"
        )


def group_inverse(X, form: Form) -> np.ndarray:
    """Inverse of a group element without a linear solve.

    Every supported M is orthogonal, so X^{-1} = M^{-1} X^T M = M^T X^T M.
    """
    M = form_matrix(form)
    return M.T @ np.asarray(X, dtype=float).T @ M


def blocks_of(X, p: int):
    """Split X into the 2x2 block pattern [[A, B], [B2, D]] at row/col p."""
    X = np.asarray(X, dtype=float)
    return X[:p, :p], X[:p, p:], X[p:, :p], X[p:, p:]


@dataclass
class BlockReport:
    """Raw residuals of the block conditions characterizing symmetric members.

    The conditions are quadratic in the entries of X, so boolean verdicts
    compare each residual against ``tol * scale`` with
    ``scale = max(1, ||X||_F^2)``.
    """

    form: Form
    residuals: dict[str, float]
    scale: float = 1.0

    def satisfied(self, tol: float = 1e-10) -> dict[str, bool]:
        return {k: v <= tol * self.scale for k, v in self.residuals.items()}

    def ok(self, tol: float = 1e-10) -> bool:
        return all(self.satisfied(tol).values())

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


def symmetric_block_report(X, form: Form, tol: float = 1e-8) -> BlockReport:
    """Evaluate the defining block conditions for a symmetric matrix.

    The conditions characterize membership of symmetric X in G_M:

    * signature I_{p,q}:  A^2 - B B^T = I_p,  A B = B D,  D^2 - B^T B = I_q
    * Minkowski (as diag(sigma_z, -I_2) blocks):
      A sz A - B B^T = sz,  A sz B = B D,  D^2 - B^T sz B = I_2
    * symplectic:  B A and D B symmetric,  A D - B^2 = I_n
    * flip:  B F A and D F B antisymmetric,  A F D + B F B = F_n
    * reversed identity K:  B A and D B antisymmetric,  A D + B^2 = I_n
    """
    X = check_symmetric(X, tol)
    sc = max(1.0, fro(X) ** 2)
    kind, prm = _block_family(form)
    if kind == "ipq":
        p, q = prm
        if X.shape != (p + q, p + q):
            raise DimensionMismatchError("matrix does not match the form dimension")
        A, B, _, D = blocks_of(X, p)
        res = {
            "A^2 - B B^T = I": fro(A @ A - B @ B.T - np.eye(p)),
            "A B = B D": fro(A @ B - B @ D),
            "D^2 - B^T B = I": fro(D @ D - B.T @ B - np.eye(q)),
        }
    elif kind == "minkowski":
        if X.shape != (4, 4):
            raise DimensionMismatchError("Minkowski form needs a 4x4 matrix")
        A, B, _, D = blocks_of(X, 2)
        sz = _SIGMA_Z
        res = {
            "A sz A - B B^T = sz": fro(A @ sz @ A - B @ B.T - sz),
            "A sz B = B D": fro(A @ sz @ B - B @ D),
            "D^2 - B^T sz B = I": fro(D @ D - B.T @ sz @ B - np.eye(2)),
        }
    elif kind == "symplectic":
        n = prm
        A, B, _, D = blocks_of(X, n)
        BA, DB = B @ A, D @ B
        res = {
            "B A symmetric": fro(BA - BA.T),
            "D B symmetric": fro(DB - DB.T),
            "A D - B^2 = I": fro(A @ D - B @ B - np.eye(n)),
        }
    elif kind == "flip":
        n = prm
        A, B, _, D = blocks_of(X, n)
        F = _flip(n)
        BFA, DFB = B @ F @ A, D @ F @ B
        res = {
            "B F A antisymmetric": fro(BFA + BFA.T),
            "D F B antisymmetric": fro(DFB + DFB.T),
            "A F D + B F B = F": fro(A @ F @ D + B @ F @ B - F),
        }
    elif kind == "k":
        n = prm
        A, B, _, D = blocks_of(X, n)
        BA, DB = B @ A, D @ B
        res = {
            "B A antisymmetric": fro(BA + BA.T),
            "D B antisymmetric": fro(DB + DB.T),
            "A D + B^2 = I": fro(A @ D + B @ B - np.eye(n)),
        }
    else:  # pragma: no cover
        raise UnsupportedFormError(f"no block conditions for {form.name}")
    return BlockReport(form, res, sc)


def _block_family(form: Form):
    """Map a form onto one of the five block-condition families."""
    if form.kind == "ipq":
        if form.params == (1, 3):
            return "minkowski", None
        return "ipq", form.params
    if form.kind == "minkowski":
        return "minkowski", None
    if form.kind in ("symplectic", "flip", "k"):
        return form.kind, form.params[0]
    if form.kind == "basis":
        pair = form.params
        if pair == ("i", "i"):
            return "ipq", (2, 2)
        if pair == ("1", "1"):
            return "ipq", (4, 0)
        if pair == ("1", "j"):
            return "symplectic", 2
        if pair == ("j", "i"):
            return "flip", 2
        if pair == ("i", "k"):
            return "k", 2
    raise UnsupportedFormError(
        f"no symmetric block characterization implemented for {form.name}"
    )


def is_posdef_in_group(X, form: Form, tol: float = 1e-8) -> bool:
    """Positive definiteness of a symmetric group element via its blocks.

    For these groups a symmetric member is positive definite exactly when
    both diagonal square blocks are, so only small Sylvester tests run.
    Raises if X is not a symmetric group member to tolerance.
    """
    X = check_symmetric(X, tol)
    report = symmetric_block_report(X, form, tol)
    if not report.ok(tol):
        raise NotInGroupError(
            f"symmetric block conditions fail for {form.name}: "
            f"max residual {report.max_residual:.3e}"
        )
    kind, prm = _block_family(form)
    if kind == "ipq":
        p = prm[0]
    elif kind == "minkowski":
        p = 2
    else:
        p = prm
    A, _, _, D = blocks_of(X, p)
    if A.size == 0 or D.size == 0:
        return sylvester_is_posdef(X)
    return sylvester_is_posdef(A) and sylvester_is_posdef(D)


_SIGN_DEAD_ZONE = 1e-12


def _strict_sign(value: float, what: str) -> int:
    if abs(value) <= _SIGN_DEAD_ZONE:
        raise DegenerateBlockError(
            f"{what} = {value:.3e} lies inside the sign dead zone"
        )
    return 1 if value > 0 else -1


@dataclass(frozen=True)
class ComponentLabel:
    """Connected-component label with its defining sign data."""

    family: str  # "inn" or "minkowski"
    det_sign: int
    signs: tuple  # (det A, det D) or (sign of the (1,1) entry,)

    @property
    def name(self) -> str:
        d = "+" if self.det_sign > 0 else "-"
        if self.family == "inn":
            a = "+" if self.signs[0] > 0 else "-"
            b = "+" if self.signs[1] > 0 else "-"
            return f"det{d},A{a},D{b}"
        t = "+" if self.signs[0] > 0 else "-"
        return f"det{d},t{t}"

    @property
    def is_identity(self) -> bool:
        return self.det_sign > 0 and all(s > 0 for s in self.signs)


def component_of(X, form: Form, tol: float = DEFAULT_MEMBERSHIP_TOL) -> ComponentLabel:
    """Classify X into a connected component of G_{I_{n,n}} or the Lorentz group.

    For the split signature the four components are distinguished by
    (det X, sign det A, sign det D); for the Minkowski signature by
    (det X, sign of the time-time entry).
    """
    X = np.asarray(X, dtype=float)
    require_in_group(X, form, tol)
    if form.kind == "ipq" and form.params[0] == form.params[1]:
        n = form.params[0]
        A, _, _, D = blocks_of(X, n)
        det_x = _strict_sign(float(np.linalg.det(X)), "det X")
        det_a = _strict_sign(float(np.linalg.det(A)), "det A")
        det_d = _strict_sign(float(np.linalg.det(D)), "det D")
        if det_x != det_a * det_d:
            raise DegenerateBlockError("inconsistent block determinant signs")
        return ComponentLabel("inn", det_x, (det_a, det_d))
    if form.kind == "minkowski" or (form.kind == "ipq" and form.params == (1, 3)):
        det_x = _strict_sign(float(np.linalg.det(X)), "det X")
        t = _strict_sign(float(X[0, 0]), "X[0,0]")
        return ComponentLabel("minkowski", det_x, (t,))
    if form.kind == "basis" and form.params == ("i", "i"):
        return component_of(X, Form.ipq(2, 2), tol)
    raise UnsupportedFormError(
        f"component classification is only available for the split and "
        f"Minkowski signatures, not {form.name}"
    )


INN_COMPONENTS = ("det+,A+,D+", "det+,A-,D-", "det-,A+,D-", "det-,A-,D+")
MINKOWSKI_COMPONENTS = ("det+,t+", "det+,t-", "det-,t+", "det-,t-")


def component_prefix(form: Form, label: str) -> np.ndarray:
    """A fixed group element lying in the named component.

    Multiplying an identity-component sample by this prefix lands in the
    requested component.
    """
    if form.kind == "ipq" and form.params[0] == form.params[1]:
        n = form.params[0]
        if label not in INN_COMPONENTS:
            raise UnsupportedFormError(f"unknown component {label!r}")
        refl = np.diag([1.0] * (n - 1) + [-1.0])
        pick = {
            "det+,A+,D+": np.eye(2 * n),
            "det+,A-,D-": _blockdiag(refl, refl),
            "det-,A+,D-": _blockdiag(np.eye(n), refl),
            "det-,A-,D+": _blockdiag(refl, np.eye(n)),
        }
        return pick[label]
    if form.kind == "minkowski" or (form.kind == "ipq" and form.params == (1, 3)):
        if label not in MINKOWSKI_COMPONENTS:
            raise UnsupportedFormError(f"unknown component {label!r}")
        m = np.diag([1.0, -1.0, -1.0, -1.0])
        pick = {
            "det+,t+": np.eye(4),
            "det+,t-": -np.eye(4),
            "det-,t+": m,
            "det-,t-": -m,
        }
        return pick[label]
    raise UnsupportedFormError(f"no component structure for {form.name}")


def _blockdiag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, m = a.shape[0], b.shape[0]
    out = np.zeros((n + m, n + m))
    out[:n, :n] = a
    out[n:, n:] = b
    return out
