"""Independent reference routines used by the tests and the symplectic path.

Everything here deliberately avoids the closed-form kernels of the rest of
the package: the Newton polar iteration, a cyclic Jacobi eigensolver and a
scaling-and-squaring exponential provide second opinions, and the seeded
sampler produces a reproducible corpus of group elements.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    ConvergenceError,
    NotSymmetricError,
    SingularMatrixError,
    UnsupportedFormError,
)
from .forms import Form, component_prefix, form_matrix
from .linalg import fro, scale_of


class SplitMix64:
    """Tiny deterministic 64-bit generator (splitmix64 recurrence).

    state += 0x9E3779B97F4A7C15; the output mixes with the constants
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB and shifts 30/27/31.  Chosen
    so the test corpus is reproducible independent of any library RNG.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = -1.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * 2.0**-53  # in [0, 1)
        return lo + (hi - lo) * u

    def matrix(self, n: int, lo: float = -1.0, hi: float = 1.0) -> np.ndarray:
        return np.array([[self.uniform(lo, hi) for _ in range(n)] for _ in range(n)])


def newton_polar(X, tol: float = 1e-12, max_iter: int = 100):
    """Polar decomposition X = Q P by the scaled Newton iteration.

    Q_{k+1} = (g Q_k + (g Q_k)^{-T}) / 2 with determinant scaling
    g = |det Q_k|^{-1/n}.  Returns a :class:`~formpolar.polar.PolarFactors`.
    """
    from .polar import PolarFactors  # deferred: polar imports this module

    X = np.asarray(X, dtype=float)
    n = X.shape[0]
    det = float(np.linalg.det(X))
    if abs(det) <= tol:
        raise SingularMatrixError(f"|det X| = {abs(det):.3e} at or below tolerance")
    Q = X.copy()
    for _ in range(max_iter):
        g = abs(float(np.linalg.det(Q))) ** (-1.0 / n)
        nxt = 0.5 * (g * Q + np.linalg.inv(g * Q).T)
        step = fro(nxt - Q)
        Q = nxt
        if step <= tol * scale_of(Q):
            break
    else:
        raise ConvergenceError(f"Newton polar did not converge in {max_iter} steps")
    P = Q.T @ X
    P = (P + P.T) / 2
    return PolarFactors(
        orthogonal=Q,
        posdef=P,
        residual_reconstruction=fro(Q @ P - X),
        residual_orthogonality=fro(Q.T @ Q - np.eye(n)),
        residual_membership=(float("nan"), float("nan")),
    )


def jacobi_eigh(S, tol: float = 1e-13, max_sweeps: int = 60):
    """Symmetric eigendecomposition by cyclic Jacobi rotations.

    Returns ``(w, V)`` with eigenvalues ascending and ``S = V diag(w) V^T``.
    Sized for the 4x4 matrices used here, but dimension generic.
    """
    S = np.asarray(S, dtype=float)
    if fro(S - S.T) > 1e-10 * scale_of(S):
        raise NotSymmetricError("Jacobi eigensolver needs a symmetric matrix")
    A = (S + S.T) / 2
    n = A.shape[0]
    V = np.eye(n)
    thresh = tol * scale_of(S)
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, fro(A) ** 2 - float(np.sum(np.diag(A) ** 2))))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= thresh / (n * n):
                    continue
                # classical Jacobi rotation zeroing A[p, q]
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                Rpq = np.eye(n)
                Rpq[p, p] = Rpq[q, q] = c
                Rpq[p, q] = s
                Rpq[q, p] = -s
                A = Rpq.T @ A @ Rpq
                V = V @ Rpq
    else:
        raise ConvergenceError("Jacobi sweeps did not reduce the off-diagonal norm")
    order = np.argsort(np.diag(A))
    return np.diag(A)[order].copy(), V[:, order].copy()


def expm(Z) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a Taylor series."""
    Z = np.asarray(Z, dtype=float)
    n = Z.shape[0]
    norm = float(np.max(np.abs(Z))) * n
    squarings = max(0, int(math.ceil(math.log2(norm / 0.25))) if norm > 0.25 else 0)
    T = Z / (2.0**squarings)
    term = np.eye(n)
    out = np.eye(n)
    for k in range(1, 40):
        term = term @ T / k
        out = out + term
        if fro(term) < 1e-17 * max(1.0, fro(out)):
            break
    for _ in range(squarings):
        out = out @ out
    return out


def lie_algebra_project(Z, form: Form) -> np.ndarray:
    """Project onto {Z : Z^T M + M Z = 0}.

    Valid because every supported M is orthogonal with M^2 = +/- I, so
    W = (Z - M^T Z^T M) / 2 satisfies the condition exactly.
    """
    M = form_matrix(form)
    M2 = M @ M
    if fro(M2 - np.eye(M.shape[0])) > 1e-12 and fro(M2 + np.eye(M.shape[0])) > 1e-12:
        raise UnsupportedFormError(f"form {form.name} does not square to +/- identity")
    Z = np.asarray(Z, dtype=float)
    return 0.5 * (Z - M.T @ Z.T @ M)


def sample_group_element(form: Form, seed: int, scale: float = 1.0) -> np.ndarray:
    """Deterministic identity-component sample exp(Z), Z in the Lie algebra.

    Entries of Z are clipped to magnitude at most ``scale``; seed zero and
    scale zero both reproduce exactly.
    """
    n = form.dim
    rng = SplitMix64(seed)
    Z = lie_algebra_project(rng.matrix(n), form)
    m = float(np.max(np.abs(Z)))
    if m > scale:
        Z = Z * (scale / m) if scale > 0 else np.zeros_like(Z)
    if scale == 0:
        Z = np.zeros_like(Z)
    return expm(Z)


def sample_component_element(
    form: Form, component: str, seed: int, scale: float = 1.0
) -> np.ndarray:
    """Sample from a named connected component (prefix times identity sample)."""
    return component_prefix(form, component) @ sample_group_element(form, seed, scale)
