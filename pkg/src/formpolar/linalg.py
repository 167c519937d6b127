"""Fixed-size dense kernels: closed-form 2x2 factorizations.

All routines work on plain ``numpy.ndarray`` values and never mutate their
arguments.  The square-root convention throughout the package is
``Y = Z^T Z``; the unique symmetric positive definite square root is the
special case ``Z = Z^T``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    NotPositiveDefiniteError,
    NotPositiveSemidefiniteError,
    NotSymmetricError,
)

DEFAULT_TOL = 1e-10


def _as_matrix(a, shape, dtype=float) -> np.ndarray:
    m = np.asarray(a, dtype=dtype)
    if m.shape != shape:
        raise ValueError(f"expected shape {shape}, got {m.shape}")
    return m


def fro(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a)))


def scale_of(a) -> float:
    """max(1, ||a||_F), the relative-tolerance scale used everywhere."""
    return max(1.0, fro(a))


def inv_2x2(m) -> np.ndarray:
    """Closed-form inverse of a 2x2 matrix (adjugate over determinant)."""
    m = _as_matrix(m, (2, 2))
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if det == 0.0:
        raise ZeroDivisionError("singular 2x2 matrix")
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det


def sylvester_is_posdef(Y, tol: float = DEFAULT_TOL) -> bool:
    """Positive definiteness of a small symmetric matrix via leading minors.

    The threshold is ``tol * max(1, ||Y||)`` on every minor, so the test is
    scale aware.  Supports 1x1 through 3x3, which covers every diagonal
    block handled by the group criteria.
    """
    Y = np.asarray(Y, dtype=float)
    eps = tol * scale_of(Y)
    n = Y.shape[0]
    if n == 1:
        return Y[0, 0] > eps
    if n == 2:
        det = Y[0, 0] * Y[1, 1] - Y[0, 1] * Y[1, 0]
        return Y[0, 0] > eps and det > eps
    minors = [float(np.linalg.det(Y[:k, :k])) for k in range(1, n + 1)]
    return all(m > eps for m in minors)


def sylvester_is_psd(Y, tol: float = DEFAULT_TOL) -> bool:
    """Positive *semi*definiteness test with tolerance (1x1/2x2 closed form)."""
    Y = np.asarray(Y, dtype=float)
    eps = tol * scale_of(Y)
    n = Y.shape[0]
    if n == 1:
        return Y[0, 0] >= -eps
    if n == 2:
        det = Y[0, 0] * Y[1, 1] - Y[0, 1] * Y[1, 0]
        tr = Y[0, 0] + Y[1, 1]
        # eigenvalues nonnegative  <=>  trace >= 0 and det >= 0
        return tr >= -eps and det >= -eps * scale_of(Y)
    w = np.linalg.eigvalsh((Y + Y.T) / 2)
    return bool(w.min() >= -eps)


def check_symmetric(S, tol: float = DEFAULT_TOL, what: str = "matrix") -> np.ndarray:
    """Return the symmetrized matrix, raising if the skew part is too large."""
    S = np.asarray(S, dtype=float)
    skew = fro(S - S.T)
    if skew > tol * scale_of(S):
        raise NotSymmetricError(f"{what} is not symmetric (|S - S^T| = {skew:.3e})")
    return (S + S.T) / 2


def cholesky_lower_2x2(S, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Lower-triangular L with L L^T = S for symmetric PSD 2x2 input.

    Zero pivots are tolerated: a rank-deficient S yields zero columns, which
    the completion and polar routines rely on when A - I is singular.
    """
    S = check_symmetric(_as_matrix(S, (2, 2)), tol)
    eps = tol * scale_of(S)
    s11, s12, s22 = S[0, 0], S[0, 1], S[1, 1]
    det = s11 * s22 - s12 * s12
    if s11 < -eps or det < -eps * scale_of(S) or s22 < -eps:
        raise NotPositiveSemidefiniteError(
            f"leading minors {s11:.3e}, {det:.3e} negative beyond tolerance"
        )
    if s11 <= eps:
        # zero pivot: PSD forces the whole first row/column to vanish
        if abs(s12) > math.sqrt(max(eps, 0.0)) * scale_of(S):
            raise NotPositiveSemidefiniteError(
                "zero pivot with nonzero off-diagonal entry"
            )
        return np.array([[0.0, 0.0], [0.0, math.sqrt(max(s22, 0.0))]])
    l11 = math.sqrt(s11)
    l21 = s12 / l11
    rem = s22 - l21 * l21
    l22 = math.sqrt(rem) if rem > 0.0 else 0.0
    return np.array([[l11, 0.0], [l21, l22]])


def posdef_sqrt_2x2(Y, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Unique symmetric positive definite square root of a 2x2 SPD matrix.

    Closed form, no eigendecomposition: with ``alpha = sqrt(y11)``,
    ``beta = y12/alpha`` and ``gamma = sqrt(det(Y)/y11)`` the root is the
    rotation ``U_theta`` applied to the upper Cholesky factor, where
    ``tan(theta) = beta / (alpha + gamma)``.  The two-argument arctangent
    lands theta in the correct quadrant automatically because
    ``alpha + gamma > 0``.
    """
    Y = check_symmetric(_as_matrix(Y, (2, 2)), tol)
    eps = tol * scale_of(Y)
    a11, a12 = Y[0, 0], Y[0, 1]
    det = a11 * Y[1, 1] - a12 * a12
    if a11 <= eps or det <= eps * scale_of(Y):
        raise NotPositiveDefiniteError(
            f"Sylvester criterion failed (y11 = {a11:.3e}, det = {det:.3e})"
        )
    alpha = math.sqrt(a11)
    beta = a12 / alpha
    gamma = math.sqrt(det / a11)
    theta = math.atan2(beta, alpha + gamma)
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [[alpha * c, alpha * s], [alpha * s, beta * s + gamma * c]]
    )


def rotation_2x2(theta: float) -> np.ndarray:
    """Plane rotation by theta (determinant +1)."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def reflection_2x2(theta: float) -> np.ndarray:
    """Plane reflection parametrized by theta (determinant -1)."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]])


def svd_2x2(B) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Closed-form SVD of a real 2x2 matrix: B = U @ diag(s) @ V.T.

    Uses the two-rotation construction.  Singular values come back in
    descending order; when det(B) >= 0 both U and V are rotations.
    """
    B = _as_matrix(B, (2, 2))
    e = (B[0, 0] + B[1, 1]) / 2
    f = (B[0, 0] - B[1, 1]) / 2
    g = (B[1, 0] + B[0, 1]) / 2
    h = (B[1, 0] - B[0, 1]) / 2
    q = math.hypot(e, h)
    r = math.hypot(f, g)
    sx = q + r
    sy = q - r  # may be negative; sign is pushed into U below
    a1 = math.atan2(g, f)
    a2 = math.atan2(h, e)
    theta = (a2 - a1) / 2
    phi = (a2 + a1) / 2
    U = rotation_2x2(phi)
    V = rotation_2x2(-theta)  # so that B = U @ diag(s) @ V.T
    if sy < 0.0:
        sy = -sy
        U = U @ np.diag([1.0, -1.0])
    return U, np.array([sx, sy]), V


def hermitian_posdef_sqrt_2x2(M, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Unique positive definite square root of a 2x2 Hermitian PD matrix.

    Cayley-Hamilton gives the closed form
    ``H = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M))``.
    """
    M = np.asarray(M, dtype=complex)
    if M.shape != (2, 2):
        raise ValueError(f"expected shape (2, 2), got {M.shape}")
    herm = float(np.linalg.norm(M - M.conj().T))
    if herm > tol * max(1.0, float(np.linalg.norm(M))):
        raise NotSymmetricError(f"matrix is not Hermitian (|M - M*| = {herm:.3e})")
    M = (M + M.conj().T) / 2
    det = (M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]).real
    tr = (M[0, 0] + M[1, 1]).real
    eps = tol * max(1.0, float(np.linalg.norm(M)))
    if det <= eps or tr <= eps:
        raise NotPositiveDefiniteError(
            f"Hermitian input not positive definite (tr = {tr:.3e}, det = {det:.3e})"
        )
    root = math.sqrt(det)
    return (M + root * np.eye(2)) / math.sqrt(tr + 2 * root)
