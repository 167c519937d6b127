"""Quaternion pairs acting on R^4 and the induced 16-matrix basis.

A quaternion is a length-4 float array ``[w, x, y, z]`` holding the
components along ``1, i, j, k``.  A pair ``(p, q)`` acts on R^4 (identified
with the quaternions through that basis) by ``x -> p x conj(q)``; taking
``p, q`` over the sixteen unit pairs ``e (x) f`` with ``e, f`` in
``{1, i, j, k}`` produces an orthogonal basis of M(4, R) whose members are
all special orthogonal.  This module builds those matrices, extracts the
sixteen coefficients of an arbitrary matrix, and supplies the explicit
orthogonal similarities that reduce each basis form to one of the three
canonical ones (identity, split signature, symplectic).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotSpecialOrthogonalError
from .linalg import fro, scale_of

BASIS_UNITS = ("1", "i", "j", "k")

_UNIT = {
    "1": np.array([1.0, 0.0, 0.0, 0.0]),
    "i": np.array([0.0, 1.0, 0.0, 0.0]),
    "j": np.array([0.0, 0.0, 1.0, 0.0]),
    "k": np.array([0.0, 0.0, 0.0, 1.0]),
}


def unit_quat(name: str) -> np.ndarray:
    """One of the four basis quaternions, as a fresh array."""
    return _UNIT[name].copy()


def quat_mul(a, b) -> np.ndarray:
    """Hamilton product of two quaternions."""
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.array(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ]
    )


def quat_conj(a) -> np.ndarray:
    """Quaternion conjugate (negate the imaginary part)."""
    a = np.asarray(a, dtype=float)
    return np.array([a[0], -a[1], -a[2], -a[3]])


def product_tensor_matrix(p, q) -> np.ndarray:
    """4x4 matrix of ``x -> p x conj(q)`` in the basis {1, i, j, k}.

    Bilinear in (p, q); for unit quaternions the result is special
    orthogonal.
    """
    p = np.asarray(p, dtype=float)
    qc = quat_conj(q)
    cols = [quat_mul(quat_mul(p, _UNIT[e]), qc) for e in BASIS_UNITS]
    return np.column_stack(cols)


def basis_matrix(left: str, right: str) -> np.ndarray:
    """The basis element for the unit pair (left, right)."""
    if left not in BASIS_UNITS or right not in BASIS_UNITS:
        raise ValueError(f"basis units must be one of {BASIS_UNITS}")
    return _BASIS[(left, right)].copy()


_BASIS: dict[tuple[str, str], np.ndarray] = {
    (e, f): product_tensor_matrix(_UNIT[e], _UNIT[f])
    for e in BASIS_UNITS
    for f in BASIS_UNITS
}

# imaginary slots in coefficient-vector order
_IMAG = ("i", "j", "k")


def coefficient_table(X) -> np.ndarray:
    """4x4 table of basis coefficients of X, rows = left slot, cols = right.

    The basis is trace-orthogonal with ||.||_F^2 = 4, so each coefficient is
    ``trace(B^T X) / 4``.  For ``X`` equal to a product-tensor matrix of unit
    quaternions the table is the rank-one outer product of the two
    quaternion coordinate vectors.
    """
    X = np.asarray(X, dtype=float)
    T = np.empty((4, 4))
    for a, e in enumerate(BASIS_UNITS):
        for b, f in enumerate(BASIS_UNITS):
            T[a, b] = np.tensordot(_BASIS[(e, f)], X) / 4.0
    return T


@dataclass(eq=False)
class QuatTensorRep:
    """The sixteen coefficients of a 4x4 real matrix in the pair basis.

    ``c`` is the coefficient of the identity pair; ``p, q, r`` hold the
    coefficients of the pairs with right slot i, j, k and imaginary left
    slots; ``s, t`` hold the purely antisymmetric pairs (left (x) 1 and
    1 (x) right).  The split ``(c, p, q, r)`` vs ``(s, t)`` is exactly the
    symmetric vs antisymmetric part of the matrix.
    """

    c: float
    p: np.ndarray
    q: np.ndarray
    r: np.ndarray
    s: np.ndarray = field(default_factory=lambda: np.zeros(3))
    t: np.ndarray = field(default_factory=lambda: np.zeros(3))

    @classmethod
    def from_matrix(cls, X) -> "QuatTensorRep":
        T = coefficient_table(X)
        return cls(
            c=float(T[0, 0]),
            p=T[1:, 1].copy(),
            q=T[1:, 2].copy(),
            r=T[1:, 3].copy(),
            s=T[1:, 0].copy(),
            t=T[0, 1:].copy(),
        )

    def to_matrix(self) -> np.ndarray:
        X = self.c * np.eye(4)
        for a, e in enumerate(_IMAG):
            X = X + self.p[a] * _BASIS[(e, "i")]
            X = X + self.q[a] * _BASIS[(e, "j")]
            X = X + self.r[a] * _BASIS[(e, "k")]
            X = X + self.s[a] * _BASIS[(e, "1")]
            X = X + self.t[a] * _BASIS[("1", e)]
        return X

    def antisymmetric_norm(self) -> float:
        """Size of the (s, t) part; zero exactly for symmetric matrices."""
        return float(np.sqrt(np.dot(self.s, self.s) + np.dot(self.t, self.t)))


def rep_of_matrix(X) -> QuatTensorRep:
    """Extract the full sixteen-coefficient representation of X."""
    return QuatTensorRep.from_matrix(X)


def _bisector_conjugator(e: str, target: str) -> np.ndarray:
    """Unit pure quaternion u with conj(u) e u = target, for imaginary e, target.

    The half-turn about the bisector of (e, target) swaps the two axes; when
    e == target the axis itself works.  e == -target never occurs for the
    distinct basis units handled here.
    """
    v = _UNIT[e] + _UNIT[target]
    return v / np.linalg.norm(v)


# permutation [e1 | e3 | e2 | e4], used to relate the two antisymmetric families
_P_SWAP23 = np.eye(4)[:, [0, 2, 1, 3]]

CANONICAL_I4 = "I4"
CANONICAL_I22 = "I22"
CANONICAL_J4 = "J4"


def similarity_to_canonical(left: str, right: str) -> tuple[np.ndarray, str, int]:
    """Orthogonal S with S^T (sign * M) S = canonical for the basis form M.

    Returns ``(S, canonical, sign)`` where canonical is one of ``"I4"``
    (the identity form), ``"I22"`` (split signature diag(1,1,-1,-1)) or
    ``"J4"`` (the symplectic form).  The sign absorbs the fact that M and
    -M define the same group.
    """
    if left not in BASIS_UNITS or right not in BASIS_UNITS:
        raise ValueError(f"basis units must be one of {BASIS_UNITS}")
    if left == "1" and right == "1":
        return np.eye(4), CANONICAL_I4, 1
    if left != "1" and right != "1":
        # symmetric case: rotate both slots onto i
        u = _bisector_conjugator(left, "i")
        v = _bisector_conjugator(right, "i")
        return product_tensor_matrix(u, v), CANONICAL_I22, 1
    if left == "1":
        # antisymmetric, right family: rotate the right slot onto j
        v = _bisector_conjugator(right, "j")
        return product_tensor_matrix(_UNIT["1"], v), CANONICAL_J4, 1
    # antisymmetric, left family: rotate the left slot onto i, then swap the
    # middle coordinates; the resulting congruence flips the sign of the form
    u = _bisector_conjugator(left, "i")
    S = product_tensor_matrix(u, _UNIT["1"]) @ _P_SWAP23.T
    return S, CANONICAL_J4, -1


def canonical_matrix(tag: str) -> np.ndarray:
    """Matrix of a canonical form tag returned by similarity_to_canonical."""
    if tag == CANONICAL_I4:
        return np.eye(4)
    if tag == CANONICAL_I22:
        return basis_matrix("i", "i")
    if tag == CANONICAL_J4:
        return basis_matrix("1", "j")
    raise ValueError(f"unknown canonical tag {tag!r}")


def rotation_to_unit_pair(R, tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Recover unit quaternions (u, v) with ``product_tensor_matrix(u, v) = R``.

    R must be special orthogonal.  The coefficient table of R is the rank-one
    outer product u v^T; the dominant entry seeds a stable factorization.
    The (u, v) ~ (-u, -v) ambiguity is resolved by making the first
    nonnegligible component of u positive.
    """
    R = np.asarray(R, dtype=float)
    if R.shape != (4, 4):
        raise NotSpecialOrthogonalError(f"expected a 4x4 matrix, got {R.shape}")
    ortho = fro(R.T @ R - np.eye(4))
    det = float(np.linalg.det(R))
    if ortho > tol * scale_of(R) or abs(det - 1.0) > max(tol * scale_of(R), 1e-6):
        raise NotSpecialOrthogonalError(
            f"not special orthogonal (|R^T R - I| = {ortho:.3e}, det = {det:.6f})"
        )
    T = coefficient_table(R)
    a, b = np.unravel_index(np.argmax(np.abs(T)), T.shape)
    u = T[:, b] / np.linalg.norm(T[:, b])
    v = T[a, :] / np.linalg.norm(T[a, :])
    if u[a] * v[b] * T[a, b] < 0.0:
        v = -v
    if fro(np.outer(u, v) - T) > max(tol * 10, 1e-8):
        raise NotSpecialOrthogonalError(
            "coefficient table is not rank one; R is not a product-tensor matrix"
        )
    for comp in u:
        if abs(comp) > 1e-8:
            if comp < 0.0:
                u, v = -u, -v
            break
    return u, v
