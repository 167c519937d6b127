import numpy as np
import pytest

from formpolar.oracle import SplitMix64


def fro(a):
    return float(np.linalg.norm(np.asarray(a)))


def rand_spd_sl2(rng: SplitMix64) -> np.ndarray:
    """Random symmetric positive definite 2x2 with determinant one."""
    M = rng.matrix(2, -1.5, 1.5)
    S = M @ M.T + 0.25 * np.eye(2)
    return S / np.sqrt(np.linalg.det(S))


def rand_sl2c(rng: SplitMix64) -> np.ndarray:
    """Random complex 2x2 with determinant one."""
    while True:
        G = rng.matrix(2, -1.5, 1.5) + 1j * rng.matrix(2, -1.5, 1.5)
        det = G[0, 0] * G[1, 1] - G[0, 1] * G[1, 0]
        if abs(det) > 0.2:
            return G / np.sqrt(det)


def rand_unit_quat(rng: SplitMix64) -> np.ndarray:
    while True:
        q = np.array([rng.uniform() for _ in range(4)])
        n = np.linalg.norm(q)
        if n > 0.1:
            return q / n


@pytest.fixture
def announce(capfd):
    """Print a line straight to the terminal even under output capture."""

    def go(line: str):
        with capfd.disabled():
            print(line)

    return go
