import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formpolar.errors import (
    NotPositiveDefiniteError,
    NotPositiveSemidefiniteError,
    NotSymmetricError,
)
from formpolar.linalg import (
    cholesky_lower_2x2,
    hermitian_posdef_sqrt_2x2,
    posdef_sqrt_2x2,
    reflection_2x2,
    rotation_2x2,
    svd_2x2,
    sylvester_is_psd,
)
from formpolar.oracle import SplitMix64, jacobi_eigh

from conftest import fro

entry = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


def spd_from_entries(b11, b12, b21, b22):
    B = np.array([[b11, b12], [b21, b22]])
    return np.eye(2) + B @ B.T


class TestCholesky:
    def test_identity(self):
        assert np.allclose(cholesky_lower_2x2(np.eye(2)), np.eye(2))

    def test_known_factor(self):
        L = cholesky_lower_2x2(np.array([[4.0, 2.0], [2.0, 2.0]]))
        assert np.allclose(L, [[2.0, 0.0], [1.0, 1.0]])

    def test_zero_pivot(self):
        L = cholesky_lower_2x2(np.array([[0.0, 0.0], [0.0, 1.0]]))
        assert np.allclose(L, [[0.0, 0.0], [0.0, 1.0]])

    def test_rank_one(self):
        v = np.array([1.5, -2.0])
        S = np.outer(v, v)
        L = cholesky_lower_2x2(S)
        assert fro(L @ L.T - S) <= 1e-12 * fro(S)
        assert L[0, 1] == 0.0 and L[1, 1] == pytest.approx(0.0, abs=1e-12)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetricError):
            cholesky_lower_2x2(np.array([[1.0, 0.5], [0.0, 1.0]]))

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveSemidefiniteError):
            cholesky_lower_2x2(np.array([[1.0, 2.0], [2.0, 1.0]]))

    @given(entry, entry, entry, entry)
    @settings(max_examples=200, deadline=None)
    def test_reconstruction(self, b11, b12, b21, b22):
        S = spd_from_entries(b11, b12, b21, b22)
        L = cholesky_lower_2x2(S)
        assert fro(L @ L.T - S) <= 1e-12 * max(1.0, fro(S))
        assert L[0, 1] == 0.0 and L[0, 0] >= 0.0 and L[1, 1] >= 0.0


class TestPosdefSqrt:
    def test_identity(self):
        assert np.allclose(posdef_sqrt_2x2(np.eye(2)), np.eye(2))

    def test_diagonal(self):
        assert np.allclose(posdef_sqrt_2x2(np.diag([4.0, 1.0])), np.diag([2.0, 1.0]))

    def test_constant_row_sum(self):
        # eigenpairs of [[2,1],[1,2]] are (3, (1,1)) and (1, (1,-1)), so the
        # root is ((sqrt(3)+1)/2) on the diagonal, ((sqrt(3)-1)/2) off it
        R = posdef_sqrt_2x2(np.array([[2.0, 1.0], [1.0, 2.0]]))
        hi, lo = (math.sqrt(3.0) + 1.0) / 2.0, (math.sqrt(3.0) - 1.0) / 2.0
        assert np.allclose(R, [[hi, lo], [lo, hi]], atol=1e-14)

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            posdef_sqrt_2x2(np.array([[1.0, 2.0], [2.0, 1.0]]))
        with pytest.raises(NotPositiveDefiniteError):
            posdef_sqrt_2x2(-np.eye(2))

    @given(entry, entry, entry, entry)
    @settings(max_examples=300, deadline=None)
    def test_square_and_match_eigenroute(self, b11, b12, b21, b22):
        Y = spd_from_entries(b11, b12, b21, b22)
        R = posdef_sqrt_2x2(Y)
        assert fro(R @ R - Y) <= 1e-12 * max(1.0, fro(Y))
        assert fro(R - R.T) == 0.0
        w, V = jacobi_eigh(Y)
        R_eig = V @ np.diag(np.sqrt(w)) @ V.T
        assert fro(R - R_eig) <= 1e-12

    def test_square_root_family(self):
        # any two square roots Z1, Z2 (with Y = Z^T Z) differ by a left
        # orthogonal factor; a rotation when the determinants agree in sign,
        # a reflection otherwise
        rng = SplitMix64(7)
        for _ in range(100):
            Y = spd_from_entries(*(rng.uniform(-3, 3) for _ in range(4)))
            Z1 = cholesky_lower_2x2(Y).T  # upper factor, Z1^T Z1 = Y
            Z2 = posdef_sqrt_2x2(Y)
            Z3 = reflection_2x2(rng.uniform(-3, 3)) @ Z1
            for Z in (Z2, Z3):
                U = Z @ np.linalg.inv(Z1)
                assert fro(U.T @ U - np.eye(2)) <= 1e-12
                du = float(np.linalg.det(U))
                same_sign = np.linalg.det(Z) * np.linalg.det(Z1) > 0
                assert (du > 0) == same_sign
                theta = math.atan2(U[1, 0], U[0, 0])
                expected = rotation_2x2(theta) if du > 0 else reflection_2x2(
                    math.atan2(U[0, 1], U[0, 0])
                )
                assert fro(U - expected) <= 1e-12

    def test_a_minus_identity_stays_psd(self):
        # A > 0 with A^2 - I >= 0 implies A - I >= 0
        rng = SplitMix64(8)
        for _ in range(100):
            B = rng.matrix(2, -3, 3)
            A = posdef_sqrt_2x2(np.eye(2) + B @ B.T)  # A^2 - I = B B^T >= 0
            assert sylvester_is_psd(A - np.eye(2), 1e-10)


class TestRotationReflection:
    def test_values(self):
        assert np.allclose(rotation_2x2(0.0), np.eye(2))
        assert np.allclose(rotation_2x2(math.pi / 2), [[0, -1], [1, 0]], atol=1e-15)
        assert np.allclose(reflection_2x2(0.0), np.diag([1.0, -1.0]))
        assert np.allclose(reflection_2x2(math.pi), np.diag([-1.0, 1.0]), atol=1e-15)

    @given(st.floats(min_value=-10, max_value=10, allow_nan=False))
    @settings(max_examples=100, deadline=None)
    def test_orthogonality_and_determinants(self, theta):
        U = rotation_2x2(theta)
        V = reflection_2x2(theta)
        assert fro(U.T @ U - np.eye(2)) <= 1e-15 * 4
        assert fro(V.T @ V - np.eye(2)) <= 1e-15 * 4
        assert np.linalg.det(U) == pytest.approx(1.0, abs=1e-14)
        assert np.linalg.det(V) == pytest.approx(-1.0, abs=1e-14)


class TestSvd2x2:
    def test_identity(self):
        _, s, _ = svd_2x2(np.eye(2))
        assert np.allclose(s, [1.0, 1.0])

    def test_rank_one_diagonal(self):
        _, s, _ = svd_2x2(np.diag([3.0, 0.0]))
        assert np.allclose(s, [3.0, 0.0])

    def test_singular_values_against_gram_eigenvalues(self):
        B = np.array([[1.0, 2.0], [3.0, 4.0]])
        # eigenvalues of B^T B = [[10,14],[14,20]] are 15 +/- sqrt(221)
        expect = np.sqrt([15.0 + math.sqrt(221.0), 15.0 - math.sqrt(221.0)])
        _, s, _ = svd_2x2(B)
        assert np.allclose(s, expect, atol=1e-12)

    def test_reconstruction_and_conventions(self):
        rng = SplitMix64(9)
        for _ in range(300):
            B = rng.matrix(2, -4, 4)
            U, s, V = svd_2x2(B)
            assert fro(U @ np.diag(s) @ V.T - B) <= 1e-12 * max(1.0, fro(B))
            assert fro(U.T @ U - np.eye(2)) <= 1e-13
            assert fro(V.T @ V - np.eye(2)) <= 1e-13
            assert s[0] >= s[1] >= 0.0
            if np.linalg.det(B) >= 0:
                assert np.linalg.det(U) > 0 and np.linalg.det(V) > 0


class TestHermitianSqrt:
    def test_identity_and_diagonal(self):
        assert np.allclose(hermitian_posdef_sqrt_2x2(np.eye(2)), np.eye(2))
        assert np.allclose(
            hermitian_posdef_sqrt_2x2(np.diag([4.0, 1.0])), np.diag([2.0, 1.0])
        )

    def test_complex_entry(self):
        M = np.array([[2.0, 1j], [-1j, 2.0]])
        H = hermitian_posdef_sqrt_2x2(M)
        assert np.abs(H @ H - M).max() <= 1e-14
        assert np.abs(H - H.conj().T).max() <= 1e-15

    def test_random_hermitian(self):
        rng = SplitMix64(10)
        for _ in range(200):
            G = rng.matrix(2, -2, 2) + 1j * rng.matrix(2, -2, 2)
            M = G @ G.conj().T + 0.3 * np.eye(2)
            H = hermitian_posdef_sqrt_2x2(M)
            assert np.abs(H @ H - M).max() <= 1e-12 * max(1.0, float(np.abs(M).max()))

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            hermitian_posdef_sqrt_2x2(np.array([[1.0, 2j], [-2j, 1.0]]))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotSymmetricError):
            hermitian_posdef_sqrt_2x2(np.array([[1.0, 1j], [1j, 1.0]]))
