"""Polar decomposition X = Q P inside the matrix groups.

For the split-signature group the positive definite factor is assembled in
closed form from 2x2 square roots of blocks of X^T X; every other basis form
reduces to the identity, split-signature or symplectic canonical case by an
explicit orthogonal similarity.  Both factors always land back in the same
group as the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle, quat
from .errors import InternalConsistencyError, NoSolutionError, NotInGroupError
from .forms import (
    Form,
    form_matrix,
    group_inverse,
    membership_residual,
    require_in_group,
)
from .linalg import (
    cholesky_lower_2x2,
    fro,
    inv_2x2,
    posdef_sqrt_2x2,
    reflection_2x2,
    rotation_2x2,
    scale_of,
)


@dataclass
class PolarFactors:
    """Orthogonal and positive definite factors with their diagnostics.

    ``orthogonal @ posdef`` reconstructs the input; ``residual_membership``
    holds the group residuals of the orthogonal and positive definite factor
    in that order (NaN when no form applies, e.g. for the raw Newton oracle).
    """

    orthogonal: np.ndarray
    posdef: np.ndarray
    residual_reconstruction: float
    residual_orthogonality: float
    residual_membership: tuple[float, float]

    @property
    def max_residual(self) -> float:
        vals = [self.residual_reconstruction, self.residual_orthogonality]
        vals += [v for v in self.residual_membership if not math.isnan(v)]
        return max(vals)


_I22_FORM = Form.basis("i", "i")


def _factors_with_residuals(X, Q, P, form: Form | None) -> PolarFactors:
    n = X.shape[0]
    if form is None:
        mem = (float("nan"), float("nan"))
    else:
        mem = (membership_residual(Q, form), membership_residual(P, form))
    return PolarFactors(
        orthogonal=Q,
        posdef=P,
        residual_reconstruction=fro(Q @ P - X),
        residual_orthogonality=fro(Q.T @ Q - np.eye(n)),
        residual_membership=mem,
    )


def polar_in_g22(X, tol: float = 1e-8) -> PolarFactors:
    """Polar decomposition in the split-signature group, eigendecomposition free.

    With S = X^T X = [[A, B], [B^T, D]] the positive factor is
    P = [[E, F], [F^T, H]] where

    * G is the lower Cholesky factor of A - I (positive semidefinite here),
    * E = (I + G G^T / 2)^{1/2},
    * F solves 2 E F = B,
    * H = (I + F^T F)^{1/2},

    and the orthogonal factor is Q = X P^{-1} with the group inverse
    P^{-1} = M P M (M the form matrix, no linear solve needed).
    """
    X = np.asarray(X, dtype=float)
    require_in_group(X, _I22_FORM, tol)
    S = X.T @ X
    A = (S[:2, :2] + S[:2, :2].T) / 2
    B = S[:2, 2:]
    sc = scale_of(S)
    if fro(A - np.eye(2)) <= 1e-14 * sc:
        # A = I forces B = 0 and D = I for a genuine group element
        E, F = np.eye(2), np.zeros((2, 2))
        H = posdef_sqrt_2x2((S[2:, 2:] + S[2:, 2:].T) / 2)
    else:
        G = cholesky_lower_2x2(A - np.eye(2), tol)
        E = posdef_sqrt_2x2(np.eye(2) + 0.5 * (G @ G.T))
        F = 0.5 * inv_2x2(E) @ B
        drift = fro(F @ F.T - 0.5 * (A - np.eye(2)))
        if drift > max(tol, 1e-10) * max(1.0, sc):
            raise InternalConsistencyError(
                f"F F^T deviates from (A - I)/2 by {drift:.3e}; "
                "input is not in the group to working precision"
            )
        H = posdef_sqrt_2x2(np.eye(2) + F.T @ F)
    P = np.block([[E, F], [F.T, H]])
    Q = X @ group_inverse(P, _I22_FORM)
    return _factors_with_residuals(X, Q, P, _I22_FORM)


def theta_solve(G, E, B, tol: float = 1e-8) -> tuple[float, str]:
    """Angle and branch solving sqrt(2) E G R(theta) = B.

    The branch is the rotation family when det(B) > 0 and the reflection
    family when det(B) < 0; for det(B) = 0 both branches are tried.  Kept as
    an independent validation of the direct solve used by
    :func:`polar_in_g22`.  Returns ``(theta, "U")`` or ``(theta, "V")``.
    """
    G = np.asarray(G, dtype=float)
    E = np.asarray(E, dtype=float)
    B = np.asarray(B, dtype=float)
    C = math.sqrt(2.0) * E @ G
    if fro(B) <= tol:
        return 0.0, "U"
    W = C.T @ B
    # least-squares angle on each branch: linear in (cos, sin)
    theta_u = math.atan2(W[0, 1] - W[1, 0], W[0, 0] + W[1, 1])
    theta_v = math.atan2(W[0, 1] + W[1, 0], W[0, 0] - W[1, 1])
    res_u = fro(C @ rotation_2x2(theta_u) - B)
    res_v = fro(C @ reflection_2x2(theta_v) - B)
    floor = tol * max(1.0, fro(B))
    det_b = float(np.linalg.det(B))
    if det_b > tol * max(1.0, fro(B)) ** 2:
        candidates = [(res_u, theta_u, "U")]
    elif det_b < -tol * max(1.0, fro(B)) ** 2:
        candidates = [(res_v, theta_v, "V")]
    else:
        candidates = [(res_u, theta_u, "U"), (res_v, theta_v, "V")]
    res, theta, branch = min(candidates)
    if res > floor:
        raise NoSolutionError(
            f"no orthogonal factor matches the off-diagonal block "
            f"(best residual {res:.3e} on branch {branch})"
        )
    return theta, branch


def polar_in_basis_form(X, left: str, right: str, tol: float = 1e-8) -> PolarFactors:
    """Polar decomposition in G_M for any of the sixteen basis forms.

    Conjugates by the explicit similarity into the canonical group
    (orthogonal, split signature, or symplectic), solves there, and
    conjugates the factors back; uniqueness of the polar decomposition makes
    the conjugated factors the polar factors of X.
    """
    form = Form.basis(left, right)
    X = np.asarray(X, dtype=float)
    require_in_group(X, form, tol)
    S, canon, _sign = quat.similarity_to_canonical(left, right)
    Y = S.T @ X @ S
    if canon == quat.CANONICAL_I4:
        Qc, Pc = Y, np.eye(4)
    elif canon == quat.CANONICAL_I22:
        inner = polar_in_g22(Y, tol)
        Qc, Pc = inner.orthogonal, inner.posdef
    else:  # symplectic canonical case: Newton iteration
        inner = oracle.newton_polar(Y)
        Qc, Pc = inner.orthogonal, inner.posdef
    Q = S @ Qc @ S.T
    P = S @ Pc @ S.T
    return _factors_with_residuals(X, Q, P, form)


# permutation similarity taking the (3,1) signature onto the Minkowski one:
# diag(1,1,1,-1) = -(p^T diag(1,-1,-1,-1) p) with the cyclic shift below
_P_31 = np.eye(4)[:, [3, 0, 1, 2]]


def polar_in_form(X, form: Form, tol: float = 1e-8) -> PolarFactors:
    """Dispatch the polar decomposition over every supported form."""
    from . import lorentz  # deferred: lorentz builds PolarFactors from here

    X = np.asarray(X, dtype=float)
    if form.kind == "basis":
        return polar_in_basis_form(X, *form.params, tol=tol)
    if form.kind == "minkowski" or (form.kind == "ipq" and form.params == (1, 3)):
        return lorentz.polar_in_lorentz(X, tol)
    if form.kind == "ipq" and form.params == (2, 2):
        return polar_in_g22(X, tol)
    if form.kind == "ipq" and form.params == (3, 1):
        require_in_group(X, form, tol)
        inner = lorentz.polar_in_lorentz(_P_31.T @ X @ _P_31, tol)
        Q = _P_31 @ inner.orthogonal @ _P_31.T
        P = _P_31 @ inner.posdef @ _P_31.T
        return _factors_with_residuals(X, Q, P, form)
    if form.kind == "symplectic" and form.params == (2,):
        return polar_in_basis_form(X, "1", "j", tol=tol)
    if form.kind == "flip" and form.params == (2,):
        return polar_in_basis_form(X, "j", "i", tol=tol)
    if form.kind == "k" and form.params == (2,):
        return polar_in_basis_form(X, "i", "k", tol=tol)
    raise NotInGroupError(f"polar decomposition is not implemented for {form.name}")
