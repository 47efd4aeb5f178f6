#!/usr/bin/env python3
"""
Tests for the symplectic toolkit.

This module tests:
- The standard form J and the symplectic predicate
- Symplectic spectra of the reference Hessians
- Williamson decomposition invariants on random SPD matrices
- Symplectic congruence and random symplectic matrices
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import (
    InvalidParameterError,
    NotPositiveDefiniteError,
    NotSymplecticError,
    OddDimensionError,
)
from src.models.factory import FixtureFactory
from src.symplectic import (
    J_matrix,
    is_symplectic,
    random_symplectic,
    standard_form,
    symplectic_congruence,
    symplectic_spectrum,
    williamson,
)
from tests.strategies import half_dims, random_spd, seeds


def squeezed(omega=5.0, gamma=1.0, kappa=3.0):
    return np.array(FixtureFactory.squeezed_modes(omega, gamma, kappa).hessian)


def assert_williamson_invariants(M, result, tol=1e-8):
    n = M.shape[0] // 2
    J = J_matrix(n)
    S = result.S
    scale = np.max(np.abs(M))
    assert np.max(np.abs(S.T @ J @ S - J)) <= tol * max(1.0, np.max(np.abs(S)) ** 2)
    assert np.max(np.abs(S @ M @ S.T - result.Lambda)) <= tol * scale * max(
        1.0, np.max(np.abs(S)) ** 2
    )
    assert np.all(result.spectrum > 0)
    assert np.all(np.diff(result.spectrum) >= 0)
    assert abs(np.linalg.det(S) - 1.0) <= 1e-7


class TestStandardForm:
    """Test suite for J."""

    def test_one_mode(self):
        """Test J for n=1."""
        np.testing.assert_array_equal(standard_form(1).matrix, [[0.0, 1.0], [-1.0, 0.0]])

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_identities(self, n):
        """Test J^2 = -I, J^T = -J = J^-1 and det J = 1."""
        J = J_matrix(n)
        np.testing.assert_array_equal(J @ J, -np.eye(2 * n))
        np.testing.assert_array_equal(J.T, -J)
        np.testing.assert_allclose(np.linalg.inv(J), J.T)
        assert np.linalg.det(J) == pytest.approx(1.0)

    def test_zero_modes_rejected(self):
        """Test n=0 is rejected."""
        with pytest.raises(InvalidParameterError):
            standard_form(0)


class TestIsSymplectic:
    """Test suite for the symplectic predicate."""

    def test_identity(self):
        """Test I is symplectic with zero residual."""
        check = is_symplectic(np.eye(4))
        assert check.symplectic
        assert check.residual == 0.0

    def test_unit_determinant_two_by_two(self):
        """Test every 2x2 matrix with det 1 is symplectic."""
        assert is_symplectic([[2.0, 1.0], [1.0, 1.0]])

    def test_determinant_four(self):
        """Test diag(2, 2) is rejected with residual 3."""
        check = is_symplectic(np.diag([2.0, 2.0]))
        assert not check
        assert check.residual == pytest.approx(3.0)

    def test_odd_dimension(self):
        """Test odd sizes raise."""
        with pytest.raises(OddDimensionError):
            is_symplectic(np.eye(3))

    def test_tolerance_is_honoured(self):
        """Test the verdict follows the tolerance passed in."""
        S = np.eye(2) + 1e-6 * np.array([[1.0, 0.0], [0.0, 0.0]])
        assert not is_symplectic(S, tol=1e-8)
        assert is_symplectic(S, tol=1e-5)


class TestSymplecticSpectrum:
    """Test suite for symplectic eigenvalues of the reference Hessians."""

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_identity(self, n):
        """Test I has unit spectrum."""
        np.testing.assert_allclose(symplectic_spectrum(np.eye(2 * n)), np.ones(n), atol=1e-12)

    def test_rotated_oscillator(self, rotated_hessian):
        """Test the symplectic eigenvalue is sqrt(ab) = 2 while eig is {1, 4}."""
        np.testing.assert_allclose(symplectic_spectrum(rotated_hessian), [2.0], atol=1e-12)
        np.testing.assert_allclose(np.linalg.eigvalsh(rotated_hessian), [1.0, 4.0])

    def test_squeezed_modes(self, squeezed_hessian):
        """Test the three squeezed modes have spectrum (3, sqrt 21, sqrt 24)."""
        np.testing.assert_allclose(
            symplectic_spectrum(squeezed_hessian),
            [3.0, np.sqrt(21.0), np.sqrt(24.0)],
            atol=1e-9,
        )
        np.testing.assert_allclose(
            np.linalg.eigvalsh(squeezed_hessian), [1.0, 3.0, 4.0, 6.0, 7.0, 9.0], atol=1e-12
        )

    def test_positivity_boundary(self):
        """Test omega > kappa + gamma is the positive-definite boundary."""
        assert symplectic_spectrum(squeezed(omega=4.0001)).shape == (3,)
        with pytest.raises(NotPositiveDefiniteError):
            symplectic_spectrum(squeezed(omega=3.9999))

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds)
    def test_one_mode_is_root_determinant(self, seed):
        """Test n=1 spectrum equals sqrt(det M)."""
        M = random_spd(2, seed)
        np.testing.assert_allclose(
            symplectic_spectrum(M), [np.sqrt(np.linalg.det(M))], rtol=1e-10
        )

    def test_williamson_diagonal_input(self):
        """Test a Williamson-diagonal input returns its own diagonal."""
        mu = np.array([0.5, 1.5, 3.0])
        M = np.diag(np.concatenate([mu, mu]))
        np.testing.assert_allclose(symplectic_spectrum(M), mu, atol=1e-12)

    def test_indefinite_rejected(self):
        """Test an indefinite matrix is rejected."""
        with pytest.raises(NotPositiveDefiniteError):
            symplectic_spectrum(np.diag([1.0, -1.0]))


class TestWilliamson:
    """Test suite for the Williamson decomposition."""

    def test_identity(self):
        """Test I decomposes into an orthogonal symplectic S."""
        result = williamson(np.eye(4))
        np.testing.assert_allclose(result.spectrum, [1.0, 1.0], atol=1e-12)
        np.testing.assert_allclose(result.S @ result.S.T, np.eye(4), atol=1e-12)

    def test_diagonal_one_mode(self):
        """Test diag(4, 1) has spectrum 2 and S diag(4,1) S^T = 2 I."""
        M = np.diag([4.0, 1.0])
        result = williamson(M)
        np.testing.assert_allclose(result.spectrum, [2.0], atol=1e-12)
        np.testing.assert_allclose(result.S @ M @ result.S.T, 2.0 * np.eye(2), atol=1e-12)

    def test_rotated_oscillator_residuals(self, rotated_hessian):
        """Test residuals of the rotated oscillator stay below 1e-10."""
        result = williamson(rotated_hessian)
        assert result.symplectic_residual <= 1e-10
        assert result.diagonal_residual <= 1e-10
        np.testing.assert_allclose(result.euclidean_spectrum, [1.0, 4.0], atol=1e-12)

    def test_squeezed_modes(self, squeezed_hessian):
        """Test the squeezed-mode Hessian satisfies every invariant."""
        result = williamson(squeezed_hessian)
        assert_williamson_invariants(squeezed_hessian, result)
        np.testing.assert_allclose(
            result.spectrum, [3.0, np.sqrt(21.0), np.sqrt(24.0)], atol=1e-9
        )

    def test_inverse(self, squeezed_hessian):
        """Test S_inv is the inverse of S."""
        result = williamson(squeezed_hessian)
        np.testing.assert_allclose(result.S @ result.S_inv, np.eye(6), atol=1e-10)

    def test_degenerate_spectrum(self):
        """Test a degenerate spectrum still yields a valid S."""
        S0 = random_symplectic(2, seed=4, tau=0.5)
        M = S0.T @ np.diag([2.0, 2.0, 2.0, 2.0]) @ S0
        result = williamson(M)
        assert_williamson_invariants(M, result)
        np.testing.assert_allclose(result.spectrum, [2.0, 2.0], atol=1e-9)

    def test_deterministic(self, squeezed_hessian):
        """Test repeated calls return identical S."""
        a = williamson(squeezed_hessian)
        b = williamson(squeezed_hessian)
        np.testing.assert_array_equal(a.S, b.S)

    def test_to_dict_det_check(self, rotated_hessian):
        """Test the reported det M equals prod mu^2."""
        out = williamson(rotated_hessian).to_dict()
        assert out["ordering"] == "qp-blocks"
        assert out["det_check"]["det_M"] == pytest.approx(out["det_check"]["prod_mu_squared"])

    def test_odd_dimension(self):
        """Test odd sizes raise."""
        with pytest.raises(OddDimensionError):
            williamson(np.eye(3))

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds, n=half_dims)
    def test_random_invariants(self, seed, n):
        """Test symplecticity, diagonalization and det M = prod mu^2."""
        M = random_spd(2 * n, seed)
        result = williamson(M)
        assert_williamson_invariants(M, result)
        det = np.linalg.det(M)
        assert np.prod(result.spectrum) ** 2 == pytest.approx(det, rel=1e-8)

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds, n=half_dims)
    def test_spectrum_matches_jm_eigenvalues(self, seed, n):
        """Test eig(JM) = {+-i mu} against a general complex eigensolver."""
        M = random_spd(2 * n, seed)
        mu = symplectic_spectrum(M)
        ev = np.linalg.eigvals(J_matrix(n) @ M)
        assert np.max(np.abs(ev.real)) <= 1e-8 * np.max(np.abs(M))
        imag = np.sort(ev.imag)
        np.testing.assert_allclose(imag[n:], mu, rtol=1e-8)
        np.testing.assert_allclose(imag[:n], -mu[::-1], rtol=1e-8)

    @pytest.mark.slow
    @pytest.mark.parametrize("dim", [2, 4, 8, 16])
    def test_property_suite(self, dim):
        """Test 200 random SPD matrices per dimension."""
        n = dim // 2
        for seed in range(200):
            M = random_spd(dim, 1000 * dim + seed)
            result = williamson(M)
            assert_williamson_invariants(M, result)
            assert np.prod(result.spectrum) ** 2 == pytest.approx(np.linalg.det(M), rel=1e-8)
            S = random_symplectic(n, seed, tau=0.5)
            np.testing.assert_allclose(
                symplectic_spectrum(S.T @ M @ S), result.spectrum, rtol=1e-8
            )


class TestCongruence:
    """Test suite for congruences and random symplectic matrices."""

    def test_identity_congruence(self, squeezed_hessian):
        """Test S = I returns M."""
        np.testing.assert_allclose(
            symplectic_congruence(squeezed_hessian, np.eye(6)), squeezed_hessian
        )

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds, n=half_dims)
    def test_spectrum_invariance(self, seed, n):
        """Test spectrum and determinant survive S^T M S."""
        M = random_spd(2 * n, seed)
        S = random_symplectic(n, seed + 1, tau=0.5)
        M2 = symplectic_congruence(M, S)
        np.testing.assert_allclose(symplectic_spectrum(M2), symplectic_spectrum(M), rtol=1e-8)
        assert np.linalg.det(M2) == pytest.approx(np.linalg.det(M), rel=1e-8)

    def test_not_symplectic(self):
        """Test a non-symplectic S is refused."""
        with pytest.raises(NotSymplecticError):
            symplectic_congruence(np.eye(2), np.diag([2.0, 2.0]))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_random_symplectic(self, n):
        """Test random outputs are symplectic, seeded and closed under products."""
        A = random_symplectic(n, seed=7)
        B = random_symplectic(n, seed=8)
        assert is_symplectic(A)
        np.testing.assert_array_equal(A, random_symplectic(n, seed=7))
        assert is_symplectic(A @ B)

    def test_zero_tau(self):
        """Test tau = 0 gives the identity."""
        S = random_symplectic(2, seed=1, tau=0.0)
        np.testing.assert_allclose(S, np.eye(4), atol=1e-15)

    @settings(max_examples=20, deadline=None)
    @given(n=st.integers(min_value=1, max_value=4), seed=seeds)
    def test_random_symplectic_unit_determinant(self, n, seed):
        """Test det S = 1."""
        assert np.linalg.det(random_symplectic(n, seed)) == pytest.approx(1.0, rel=1e-8)


if __name__ == "__main__":
    pytest.main([__file__])
