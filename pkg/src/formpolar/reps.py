"""Structured quaternion-pair representations of split-signature group elements.

A positive definite member is a pure symmetric combination
``c (1 x 1) + p x i + q x j + r x k`` whose coefficients follow in closed
form from its upper-right block; an orthogonal member is a single unit pair
``u x v`` (possibly times a fixed reflector when the determinant is -1).
Multiplying the two structured pieces of the polar factors represents an
arbitrary element.  The module also evaluates the quadratic identities that
the coefficients of any symmetric group element must satisfy, for the
split-signature and symplectic groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quat
from .errors import (
    NotOrthogonalInGroupError,
    NotPosDefInGroupError,
    NotSymmetricRepError,
)
from .forms import Form, is_posdef_in_group, require_in_group
from .linalg import fro, scale_of
from .polar import polar_in_g22
from .quat import QuatTensorRep

_I22 = Form.basis("i", "i")

# diag(1, 1, 1, -1): the reflector used for determinant -1 orthogonal members
REFLECTOR_I31 = np.diag([1.0, 1.0, 1.0, -1.0])


def _sqrt_params(y11: float, y12: float, y22: float):
    """(alpha, beta, gamma, theta) of the closed-form 2x2 square root."""
    alpha = math.sqrt(y11)
    beta = y12 / alpha
    gamma = math.sqrt((y11 * y22 - y12 * y12) / y11)
    theta = math.atan2(beta, alpha + gamma)
    return alpha, beta, gamma, theta


def rep_posdef_g22(P, tol: float = 1e-8) -> QuatTensorRep:
    """Coefficients (c, p, q, r) of a positive definite group element.

    Everything is a function of the four entries of the upper-right block
    alone: the diagonal blocks are the square roots of I + B B^T and
    I + B^T B, and the closed-form square-root angles feed the coefficient
    formulas directly.
    """
    P = np.asarray(P, dtype=float)
    if not is_posdef_in_group(P, _I22, tol):
        raise NotPosDefInGroupError("input is not positive definite in the group")
    b11, b12 = P[0, 2], P[0, 3]
    b21, b22 = P[1, 2], P[1, 3]
    a1, be1, g1, t1 = _sqrt_params(
        1 + b11 * b11 + b12 * b12, b11 * b21 + b12 * b22, 1 + b21 * b21 + b22 * b22
    )
    a2, be2, g2, t2 = _sqrt_params(
        1 + b11 * b11 + b21 * b21, b11 * b12 + b21 * b22, 1 + b12 * b12 + b22 * b22
    )
    e11 = a1 * math.cos(t1)
    e22 = be1 * math.sin(t1) + g1 * math.cos(t1)
    h11 = a2 * math.cos(t2)
    h22 = be2 * math.sin(t2) + g2 * math.cos(t2)
    c = (e11 + e22 + h11 + h22) / 4
    p = np.array(
        [(e11 + e22 - h11 - h22) / 4, (b12 + b21) / 2, (b22 - b11) / 2]
    )
    q = np.array(
        [
            (b21 - b12) / 2,
            (e11 - e22 + h11 - h22) / 4,
            (a1 * math.sin(t1) + a2 * math.sin(t2)) / 2,
        ]
    )
    r = np.array(
        [
            (b11 + b22) / 2,
            (a2 * math.sin(t2) - a1 * math.sin(t1)) / 2,
            (e11 - e22 - h11 + h22) / 4,
        ]
    )
    return QuatTensorRep(c=c, p=p, q=q, r=r)


@dataclass
class OrthogonalRep:
    """Unit-pair representation of an orthogonal group element.

    ``case`` 1: identity component, u and v in span{1, i};
    ``case`` 2: determinant 1 with negative block determinants, u and v in
    span{j, k}; a determinant -1 element carries ``reflector=True`` and
    represents ``diag(1, 1, 1, -1) @ (u x v)``.
    """

    case: int
    u: np.ndarray
    v: np.ndarray
    reflector: bool = False

    def to_matrix(self) -> np.ndarray:
        R = quat.product_tensor_matrix(self.u, self.v)
        return REFLECTOR_I31 @ R if self.reflector else R


def rep_orthogonal_g22(Q, tol: float = 1e-8) -> OrthogonalRep:
    """Structured representation of an orthogonal group element."""
    Q = np.asarray(Q, dtype=float)
    require_in_group(Q, _I22, tol)
    if fro(Q.T @ Q - np.eye(4)) > tol * scale_of(Q):
        raise NotOrthogonalInGroupError("input is not orthogonal within tolerance")
    det = float(np.linalg.det(Q))
    reflector = det < 0
    Z = REFLECTOR_I31 @ Q if reflector else Q
    # Z is special orthogonal and commutes with the form, hence block diagonal
    u, v = quat.rotation_to_unit_pair(Z, max(tol, 1e-9))
    case = 1 if float(np.linalg.det(Z[:2, :2])) > 0 else 2
    return OrthogonalRep(case=case, u=u, v=v, reflector=reflector)


def rep_g22(X, tol: float = 1e-8) -> tuple[OrthogonalRep, QuatTensorRep]:
    """Structured representation of an arbitrary group element via its polar
    factors: the product of the two reconstructed pieces returns X."""
    factors = polar_in_g22(X, tol)
    return (
        rep_orthogonal_g22(factors.orthogonal, tol),
        rep_posdef_g22(factors.posdef, tol),
    )


def reconstruct_g22(orth: OrthogonalRep, pos: QuatTensorRep) -> np.ndarray:
    """Matrix represented by a (orthogonal, positive definite) pair."""
    return orth.to_matrix() @ pos.to_matrix()


def _require_symmetric_rep(rep: QuatTensorRep, tol: float) -> None:
    if rep.antisymmetric_norm() > tol:
        raise NotSymmetricRepError(
            "representation has a nonzero antisymmetric (s, t) part"
        )


_E1 = np.array([1.0, 0.0, 0.0])


def check_fpi_equations(rep: QuatTensorRep, tol: float = 1e-8) -> np.ndarray:
    """Residuals of the five identities satisfied by symmetric group members.

    For a symmetric matrix with coefficients (a, p, q, r) membership in the
    split-signature group is equivalent to:

    1. a p1 = (r x q)1
    2. a (r x e1) + q1 p + p1 q = (p . q) e1
    3. a (e1 x q) + r1 p + p1 r = (p . r) e1
    4. a^2 - |p|^2 + |q|^2 + |r|^2 + 2 p1^2 - 2 q1^2 - 2 r1^2 = 1
    5. p1 ph = q1 qh + r1 rh   (ph, qh, rh: projections onto the j-k plane)

    Returns the five residual magnitudes in that order.
    """
    _require_symmetric_rep(rep, tol)
    a, p, q, r = rep.c, rep.p, rep.q, rep.r
    res1 = abs(a * p[0] - np.cross(r, q)[0])
    res2 = fro(a * np.cross(r, _E1) + q[0] * p + p[0] * q - np.dot(p, q) * _E1)
    res3 = fro(a * np.cross(_E1, q) + r[0] * p + p[0] * r - np.dot(p, r) * _E1)
    res4 = abs(
        a * a
        - np.dot(p, p)
        + np.dot(q, q)
        + np.dot(r, r)
        + 2 * p[0] ** 2
        - 2 * q[0] ** 2
        - 2 * r[0] ** 2
        - 1.0
    )
    hat = np.array([0.0, 1.0, 1.0])
    res5 = fro((p[0] * p - q[0] * q - r[0] * r) * hat)
    return np.array([res1, res2, res3, res4, res5])


def check_symplectic_symmetric(
    rep: QuatTensorRep, tol: float = 1e-8
) -> tuple[np.ndarray, bool]:
    """Residuals and positivity verdict for a symmetric symplectic member.

    The identities are a q = r x p, p . q = 0, r . q = 0 and
    a^2 - p.p + q.q - r.r = 1; such a member is positive definite exactly
    when a > 0 and 2 a^2 - 2 q.q + 1 > 0.
    """
    _require_symmetric_rep(rep, tol)
    a, p, q, r = rep.c, rep.p, rep.q, rep.r
    residuals = np.array(
        [
            fro(a * q - np.cross(r, p)),
            abs(np.dot(p, q)),
            abs(np.dot(r, q)),
            abs(a * a - np.dot(p, p) + np.dot(q, q) - np.dot(r, r) - 1.0),
        ]
    )
    verdict = a > 0 and 2 * a * a - 2 * np.dot(q, q) + 1 > 0
    return residuals, bool(verdict)
