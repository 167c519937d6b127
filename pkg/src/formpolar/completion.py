"""Completion of a single block to a positive definite element of G_{I_{n,n}},
and the explicit logarithm of such elements.

Given one block of the symmetric 2x2-block matrix [[A, B], [B^T, D]], the
remaining blocks are forced up to a square-root choice:

* given A (with A > 0 and A^2 - I >= 0): pick B with B B^T = A^2 - I, then
  D = (I + B^T B)^{1/2};
* given D: mirror image;
* given any B: A = (I + B B^T)^{1/2}, D = (I + B^T B)^{1/2}.

The intertwining A B = B D then holds automatically and the assembled matrix
is positive definite and in the group.
"""

from __future__ import annotations

import math

import numpy as np

from . import oracle
from .errors import (
    HyperbolicConstraintError,
    NotPositiveDefiniteError,
    NotPosDefInGroupError,
)
from .forms import Form, is_posdef_in_group
from .linalg import (
    check_symmetric,
    cholesky_lower_2x2,
    fro,
    posdef_sqrt_2x2,
    scale_of,
    svd_2x2,
    sylvester_is_posdef,
    sylvester_is_psd,
)


def posdef_sqrt(S, tol: float = 1e-10) -> np.ndarray:
    """Symmetric positive definite square root, dimension generic.

    Closed form for 1x1 and 2x2; Jacobi eigendecomposition otherwise.
    """
    S = check_symmetric(np.asarray(S, dtype=float), tol)
    n = S.shape[0]
    if n == 1:
        if S[0, 0] <= tol:
            raise NotPositiveDefiniteError("1x1 matrix is not positive")
        return np.array([[math.sqrt(S[0, 0])]])
    if n == 2:
        return posdef_sqrt_2x2(S, tol)
    w, V = oracle.jacobi_eigh(S)
    if w.min() <= tol * scale_of(S):
        raise NotPositiveDefiniteError("matrix is not positive definite")
    return V @ np.diag(np.sqrt(w)) @ V.T


def _psd_square_root_factor(S, tol: float) -> np.ndarray:
    """Lower-triangular L with L L^T = S for PSD S (1x1/2x2 closed form)."""
    n = S.shape[0]
    if n == 1:
        if S[0, 0] < -tol:
            raise HyperbolicConstraintError("negative 1x1 block")
        return np.array([[math.sqrt(max(S[0, 0], 0.0))]])
    if n == 2:
        return cholesky_lower_2x2(S, tol)
    w, V = oracle.jacobi_eigh(S)
    if w.min() < -tol * scale_of(S):
        raise HyperbolicConstraintError("matrix has a negative eigenvalue")
    return V @ np.diag(np.sqrt(np.maximum(w, 0.0)))


def _assemble(A, B, D) -> np.ndarray:
    n = A.shape[0]
    X = np.zeros((2 * n, 2 * n))
    X[:n, :n] = A
    X[:n, n:] = B
    X[n:, :n] = B.T
    X[n:, n:] = D
    return X


def _check_hyperbolic(M, tol: float, who: str) -> None:
    if not sylvester_is_psd(M, tol):
        raise HyperbolicConstraintError(
            f"{who}^2 - I has a negative eigenvalue beyond tolerance"
        )


def complete_given_A(A, root_choice=None, tol: float = 1e-10) -> np.ndarray:
    """Positive definite X = [[A, B], [B^T, D]] in G_{I_{n,n}} with given A.

    ``root_choice`` may be an orthogonal matrix R twisting the default
    square-root factor of A^2 - I (the lower Cholesky factor) to L R; any
    choice yields a valid completion.
    """
    A = check_symmetric(np.asarray(A, dtype=float), tol)
    if not sylvester_is_posdef(A, tol):
        raise NotPositiveDefiniteError("A is not positive definite")
    n = A.shape[0]
    _check_hyperbolic(A @ A - np.eye(n), tol, "A")
    L = _psd_square_root_factor(A @ A - np.eye(n), tol)
    B = L if root_choice is None else L @ np.asarray(root_choice, dtype=float)
    D = posdef_sqrt(np.eye(n) + B.T @ B, tol)
    return _assemble(A, B, D)


def complete_given_D(D, root_choice=None, tol: float = 1e-10) -> np.ndarray:
    """Mirror image of :func:`complete_given_A`: the lower-right block is given."""
    D = check_symmetric(np.asarray(D, dtype=float), tol)
    if not sylvester_is_posdef(D, tol):
        raise NotPositiveDefiniteError("D is not positive definite")
    n = D.shape[0]
    _check_hyperbolic(D @ D - np.eye(n), tol, "D")
    L = _psd_square_root_factor(D @ D - np.eye(n), tol)
    if root_choice is not None:
        L = L @ np.asarray(root_choice, dtype=float)
    B = L.T  # so that B^T B = D^2 - I
    A = posdef_sqrt(np.eye(n) + B @ B.T, tol)
    return _assemble(A, B, D)


def complete_given_B(B, tol: float = 1e-10) -> np.ndarray:
    """Completion with a prescribed off-diagonal block; any real B works."""
    B = np.asarray(B, dtype=float)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValueError("B must be square")
    n = B.shape[0]
    A = posdef_sqrt(np.eye(n) + B @ B.T, tol)
    D = posdef_sqrt(np.eye(n) + B.T @ B, tol)
    return _assemble(A, B, D)


def log_posdef_gnn(P, tol: float = 1e-8) -> np.ndarray:
    """Logarithm of a positive definite element of G_{I_{n,n}}.

    The logarithm is [[0, X], [X^T, 0]] where X = U E V^T comes from the
    singular value decomposition B = U diag(sigma) V^T of the off-diagonal
    block and E = diag(arcsinh(sigma)); sinh matches the block exponential,
    so exp of the result reproduces P.  The zero diagonal blocks exhibit the
    result as a Lie-algebra element, witnessing that P lies in the identity
    component.
    """
    P = np.asarray(P, dtype=float)
    n = P.shape[0] // 2
    form = Form.ipq(n, n)
    if not is_posdef_in_group(P, form, tol):
        raise NotPosDefInGroupError("input is not a positive definite group element")
    B = P[:n, n:]
    if n == 2:
        U, sig, V = svd_2x2(B)
    else:
        U, sig, Vt = np.linalg.svd(B)
        V = Vt.T
    E = np.diag(np.arcsinh(sig))
    X = U @ E @ V.T
    L = np.zeros((2 * n, 2 * n))
    L[:n, n:] = X
    L[n:, :n] = X.T
    return L


def intertwining_residual(X) -> float:
    """||A B - B D|| for the 2x2-block split of X, a consistency diagnostic."""
    X = np.asarray(X, dtype=float)
    n = X.shape[0] // 2
    A, B, D = X[:n, :n], X[:n, n:], X[n:, n:]
    return fro(A @ B - B @ D)
