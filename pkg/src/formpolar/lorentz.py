"""The Lorentz group through its double cover.

A unit-determinant complex 2x2 matrix G acts on Hermitian matrices by
``X -> G X G*``; in the Pauli basis (I, sx, sy, sz) this action is a real
4x4 matrix in the identity component of the Minkowski group, and the map is
a 2-to-1 homomorphism onto that component.  Positive definite targets can be
inverted through the cover by inspection, which yields the polar
decomposition (boost times spatial rotation) and the quaternion-pair
representation of an arbitrary Minkowski group element.  The analogous
double cover of the split-signature identity component by pairs of real
unit-determinant matrices is provided as a verification utility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quat
from .errors import (
    InternalConsistencyError,
    NoPositiveBranchError,
    NotPosDefInGroupError,
    UnitDeterminantError,
)
from .forms import Form, group_inverse, is_posdef_in_group, require_in_group
from .linalg import (
    check_symmetric,
    fro,
    hermitian_posdef_sqrt_2x2,
    inv_2x2,
    scale_of,
)
from .polar import PolarFactors, _factors_with_residuals
from .quat import QuatTensorRep

MINKOWSKI = Form.minkowski()

# time reflection diag(1, -1, -1, -1); equals the Minkowski form matrix
REFLECTOR_TIME = np.diag([1.0, -1.0, -1.0, -1.0])

_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _require_unit_det(G, tol: float, what: str) -> np.ndarray:
    G = np.asarray(G)
    det = complex(G[0, 0] * G[1, 1] - G[0, 1] * G[1, 0])
    if abs(det - 1.0) > max(tol, 1e-9) * max(1.0, float(np.abs(G).max()) ** 2):
        raise UnitDeterminantError(f"{what} has determinant {det:.6g}, expected 1")
    return G


def covering_phi(G, tol: float = 1e-9) -> np.ndarray:
    """Image of a unit-determinant complex 2x2 matrix in the Minkowski group.

    Column n holds the Pauli coordinates of ``G sigma_n G*``.  The result has
    determinant 1 and positive time-time entry.
    """
    G = _require_unit_det(np.asarray(G, dtype=complex), tol, "covering input")
    Gs = G.conj().T
    out = np.empty((4, 4))
    for n in range(4):
        Y = G @ _PAULI[n] @ Gs
        for m in range(4):
            out[m, n] = (np.tensordot(_PAULI[m].conj(), Y).real) / 2.0
    return out


def hermitian_from_params(a: float, d: float, x: float, y: float) -> np.ndarray:
    """Hermitian matrix [[a, x + iy], [x - iy, d]]."""
    return np.array([[a, x + 1j * y], [x - 1j * y, d]], dtype=complex)


def invert_phi_posdef(P, tol: float = 1e-8) -> np.ndarray:
    """Hermitian positive definite preimage of a positive definite target.

    Reads the preimage entries off the target by inspection: the (2,2) and
    (3,3) entries give |x| and |y|, the trace pair a + d is positive for a
    positive definite preimage, and the signs of x, y (and of a - d in the
    doubly degenerate case) follow from one off-diagonal entry each, since
    P12 = (a+d) x, P13 = -(a+d) y and P14 = (a+d)(a-d)/2.  Sign choices that
    leave a or d nonpositive signal an inconsistent target.
    """
    P = check_symmetric(np.asarray(P, dtype=float), tol)
    if not is_posdef_in_group(P, MINKOWSKI, tol):
        raise NotPosDefInGroupError(
            "target is not a positive definite Minkowski group element"
        )
    th = 1e-9 * scale_of(P)
    x_zero = abs(P[1, 1] - 1.0) <= th
    y_zero = abs(P[2, 2] - 1.0) <= th
    # a + d is positive for a positive definite preimage, so the whole first
    # row is linear in the remaining unknowns; reading it avoids the square
    # roots of P22 - 1 and P33 - 1, which lose half the digits near the case
    # boundaries.  The case split still decides which entries count as zero.
    apd = math.sqrt(max(2.0 * (P[0, 0] + 1.0), 0.0))
    x = 0.0 if x_zero else P[0, 1] / apd
    y = 0.0 if y_zero else -P[0, 2] / apd
    amd = 2.0 * P[0, 3] / apd
    a, d = (apd + amd) / 2, (apd - amd) / 2
    if min(a, d) <= 0.0:
        raise NoPositiveBranchError(
            "no sign choice yields a positive diagonal preimage; "
            "input is numerically inconsistent"
        )
    det = a * d - x * x - y * y
    if det <= 0.0:
        raise NoPositiveBranchError(
            "preimage determinant is not positive; input is inconsistent"
        )
    # project onto determinant one so the covering image stays in the group
    return hermitian_from_params(a, d, x, y) / math.sqrt(det)


def polar_in_lorentz(X, tol: float = 1e-8) -> PolarFactors:
    """Polar decomposition of a Minkowski group element via the cover.

    The positive factor (the boost) is Phi of the Hermitian square root of
    the preimage of X^T X; the orthogonal factor follows from the group
    inverse P^{-1} = M P M.  Works in all four connected components, since
    X^T X is blind to the sign/time-reflection prefix.
    """
    X = np.asarray(X, dtype=float)
    require_in_group(X, MINKOWSKI, tol)
    S = X.T @ X
    G = invert_phi_posdef((S + S.T) / 2, tol)
    H = hermitian_posdef_sqrt_2x2(G)
    P = covering_phi(H)
    P = (P + P.T) / 2
    Q = X @ group_inverse(P, MINKOWSKI)
    return _factors_with_residuals(X, Q, P, MINKOWSKI)


def boost_rep_from_preimage(a: float, d: float, x: float, y: float) -> QuatTensorRep:
    """Coefficients of the boost Phi(H) for H = [[a, x+iy], [x-iy, d]].

    Closed forms in the preimage entries; valid when det H = 1.
    """
    c = (a + d) ** 2 / 4
    p = np.array(
        [
            x * x,
            (a * a - d * d - 4 * x * y) / 4,
            ((a - d) * x + (a + d) * y) / 2,
        ]
    )
    q = np.array(
        [
            (d * d - a * a - 4 * x * y) / 4,
            y * y,
            ((a + d) * x + (d - a) * y) / 2,
        ]
    )
    r = np.array(
        [
            ((a - d) * x - (a + d) * y) / 2,
            (y * (d - a) - (a + d) * x) / 2,
            (a - d) ** 2 / 4,
        ]
    )
    return QuatTensorRep(c=c, p=p, q=q, r=r)


@dataclass
class LorentzRep:
    """Structured representation sign * prefix * (u x u) * boost.

    ``reflector`` selects the time reflection diag(1, -1, -1, -1) as prefix;
    the unit quaternion u gives the embedded spatial rotation, and ``boost``
    holds the (c, p, q, r) coefficients of the positive definite factor.
    ``preimage`` records the Hermitian parameters (a, d, x, y) behind the
    boost coefficients.
    """

    sign: int
    reflector: bool
    u: np.ndarray
    boost: QuatTensorRep
    preimage: tuple[float, float, float, float]

    def to_matrix(self) -> np.ndarray:
        rot = quat.product_tensor_matrix(self.u, self.u)
        out = rot @ self.boost.to_matrix()
        if self.reflector:
            out = REFLECTOR_TIME @ out
        return self.sign * out


def rep_lorentz(X, tol: float = 1e-8) -> LorentzRep:
    """Quaternion-pair representation of any Minkowski group element.

    Dispatches on (sign of the time-time entry, determinant): the element is
    sign * prefix * V * P with V an embedded spatial rotation and P the
    boost, and both structured pieces follow from the polar step.
    """
    X = np.asarray(X, dtype=float)
    require_in_group(X, MINKOWSKI, tol)
    det = float(np.linalg.det(X))
    sign = 1 if X[0, 0] > 0 else -1
    reflector = det < 0
    prefix_inv = sign * (REFLECTOR_TIME if reflector else np.eye(4))
    Y = prefix_inv @ X  # identity-component element
    factors = polar_in_lorentz(Y, tol)
    S = Y.T @ Y
    G = invert_phi_posdef((S + S.T) / 2, tol)
    H = hermitian_posdef_sqrt_2x2(G)
    a, d = float(H[0, 0].real), float(H[1, 1].real)
    x, y = float(H[0, 1].real), float(H[0, 1].imag)
    u, v = quat.rotation_to_unit_pair(factors.orthogonal, max(tol, 1e-9))
    if fro(u - v) > 1e-6:
        raise InternalConsistencyError(
            "rotation factor is not an embedded spatial rotation"
        )
    return LorentzRep(
        sign=sign,
        reflector=reflector,
        u=u,
        boost=boost_rep_from_preimage(a, d, x, y),
        preimage=(a, d, x, y),
    )


# ---------------------------------------------------------------------------
# split-signature double cover (verification utility)

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.diag([1.0, -1.0])
_ISY = np.array([[0.0, 1.0], [-1.0, 0.0]])

# anticommuting basis with squares +I, +I, -I, -I: the coefficient quadratic
# form has split signature, so conjugation acts through G_{I_{2,2}}
_SO22_BASIS = (
    np.kron(_SZ, _SX),
    np.kron(_SX, np.eye(2)),
    np.kron(_SZ, _ISY),
    np.kron(_ISY, np.eye(2)),
)


def concentric_embedding(A, B) -> np.ndarray:
    """4x4 matrix with A on the outer corners and B on the inner block."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    C = np.zeros((4, 4))
    C[0, 0], C[0, 3], C[3, 0], C[3, 3] = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
    C[1:3, 1:3] = B
    return C


def so22_cover_phi(A, B, tol: float = 1e-9) -> np.ndarray:
    """Image of a pair of real unit-determinant 2x2 matrices in G_{I_{2,2}}.

    The pair embeds concentrically and acts by conjugation on the fixed
    four-matrix basis above; the coefficient matrix of that action has
    determinant 1 and preserves the split form.
    """
    A = _require_unit_det(np.asarray(A, dtype=float), tol, "first factor").real
    B = _require_unit_det(np.asarray(B, dtype=float), tol, "second factor").real
    C = concentric_embedding(A, B)
    Cinv = concentric_embedding(inv_2x2(A), inv_2x2(B))
    out = np.empty((4, 4))
    drift = 0.0
    for n in range(4):
        Y = C @ _SO22_BASIS[n] @ Cinv
        coef = np.array([np.tensordot(_SO22_BASIS[m], Y) / 4.0 for m in range(4)])
        rec = sum(cf * Bm for cf, Bm in zip(coef, _SO22_BASIS))
        drift = max(drift, fro(rec - Y))
        out[:, n] = coef
    if drift > 1e-8 * scale_of(C) ** 2:
        raise InternalConsistencyError(
            f"conjugation left the coefficient span (drift {drift:.3e})"
        )
    return out
