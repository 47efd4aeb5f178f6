#!/usr/bin/env python3
"""
Tests for the dense linear algebra kernel.

This module tests:
- Jacobi eigensolvers on known and random matrices
- Positivity predicates
- SPD square roots
- The matrix exponential
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import (
    InvalidMatrixError,
    NonConvergentError,
    NonHermitianError,
    NonSquareError,
    NonSymmetricError,
    NotPositiveDefiniteError,
)
from src.kernel.linalg import (
    expm,
    hermitian_eig,
    inv_sqrt_spd,
    is_positive_definite,
    require_positive_definite,
    sqrt_spd,
    sym_eig,
)
from tests.strategies import random_spd, random_symmetric, seeds


class TestSymmetricEigensolver:
    """Test suite for the real symmetric Jacobi solver."""

    def test_two_by_two(self):
        """Test eigenvalues of the rotated-oscillator Hessian."""
        eig = sym_eig([[2.5, 1.5], [1.5, 2.5]])
        np.testing.assert_allclose(eig.eigenvalues, [1.0, 4.0], atol=1e-14)

    def test_eigenvalues_ascending(self):
        """Test eigenvalues come out sorted."""
        eig = sym_eig(np.diag([3.0, -1.0, 2.0, 0.5]))
        np.testing.assert_array_equal(eig.eigenvalues, [-1.0, 0.5, 2.0, 3.0])

    def test_diagonal_needs_no_sweeps(self):
        """Test an already diagonal matrix is returned as is."""
        eig = sym_eig(np.diag([1.0, 2.0]))
        assert eig.sweeps == 0

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds, dim=st.integers(min_value=1, max_value=8))
    def test_reconstruction(self, seed, dim):
        """Test V diag(lambda) V^T reproduces A and V is orthogonal."""
        A = random_symmetric(dim, seed)
        eig = sym_eig(A)
        V = eig.eigenvectors
        np.testing.assert_allclose(V.T @ V, np.eye(dim), atol=1e-12)
        np.testing.assert_allclose(eig.reconstruct(), A, atol=1e-12)

    def test_agrees_with_lapack(self):
        """Test eigenvalues match numpy on a random matrix."""
        A = random_symmetric(6, 11)
        np.testing.assert_allclose(sym_eig(A).eigenvalues, np.linalg.eigvalsh(A), atol=1e-12)

    def test_rejects_non_square(self):
        """Test non-square input is rejected."""
        with pytest.raises(NonSquareError):
            sym_eig(np.ones((2, 3)))

    def test_rejects_non_symmetric(self):
        """Test clearly asymmetric input is rejected."""
        with pytest.raises(NonSymmetricError):
            sym_eig([[1.0, 2.0], [0.0, 1.0]])

    def test_rejects_nan(self):
        """Test NaN entries are rejected."""
        with pytest.raises(InvalidMatrixError):
            sym_eig([[1.0, np.nan], [np.nan, 1.0]])

    def test_sweep_budget(self, settings_env):
        """Test a tiny sweep budget raises NonConvergentError."""
        settings_env.setenv("SYMPLECTICA_MAX_SWEEPS", "1")
        with pytest.raises(NonConvergentError):
            sym_eig(random_symmetric(8, 3))

    @pytest.mark.parametrize("seed", range(50))
    def test_converges_on_random_six_by_six(self, seed):
        """Test every seeded 6x6 symmetric matrix converges and matches numpy."""
        A = random_symmetric(6, seed)
        eig = sym_eig(A)
        assert eig.sweeps <= 20
        np.testing.assert_allclose(eig.eigenvalues, np.linalg.eigvalsh(A), atol=1e-12)

    def test_nearly_diagonal_input_stops(self):
        """Test tiny off-diagonal residue ends the sweeps instead of exhausting them."""
        A = np.diag([4.0, 3.0, 2.0, 1.0])
        A[0, 3] = A[3, 0] = 1e-13
        A[1, 2] = A[2, 1] = 1e-12
        eig = sym_eig(A)
        assert eig.sweeps <= 2
        np.testing.assert_allclose(eig.eigenvalues, [1.0, 2.0, 3.0, 4.0], atol=1e-12)


class TestHermitianEigensolver:
    """Test suite for the complex Hermitian Jacobi solver."""

    def test_pauli_y(self):
        """Test the eigenvalues of i J for one mode are -1 and +1."""
        eig = hermitian_eig(np.array([[0.0, 1j], [-1j, 0.0]]))
        np.testing.assert_allclose(eig.eigenvalues, [-1.0, 1.0], atol=1e-14)

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds, dim=st.integers(min_value=1, max_value=6))
    def test_unitary_reconstruction(self, seed, dim):
        """Test U diag(lambda) U^dagger reproduces A with U unitary."""
        rng = np.random.default_rng(seed)
        X = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        A = 0.5 * (X + X.conj().T)
        eig = hermitian_eig(A)
        U = eig.eigenvectors
        np.testing.assert_allclose(U.conj().T @ U, np.eye(dim), atol=1e-12)
        np.testing.assert_allclose(eig.reconstruct(), A, atol=1e-12)

    @pytest.mark.parametrize("seed", range(20))
    def test_converges_on_random_six_by_six(self, seed):
        """Test seeded 6x6 Hermitian matrices converge and match numpy."""
        rng = np.random.default_rng(seed)
        X = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        A = 0.5 * (X + X.conj().T)
        eig = hermitian_eig(A)
        np.testing.assert_allclose(eig.eigenvalues, np.linalg.eigvalsh(A), atol=1e-12)

    def test_rejects_non_hermitian(self):
        """Test a complex symmetric (not Hermitian) matrix is rejected."""
        with pytest.raises(NonHermitianError):
            hermitian_eig(np.array([[0.0, 1j], [1j, 0.0]]))


class TestPositivity:
    """Test suite for positivity predicates and square roots."""

    def test_identity_is_positive(self):
        """Test the identity passes with unit extreme eigenvalues."""
        report = is_positive_definite(np.eye(3))
        assert report
        assert report.min_eigenvalue == pytest.approx(1.0)

    def test_indefinite(self):
        """Test an indefinite matrix fails."""
        assert not is_positive_definite(np.diag([1.0, -1.0]))

    def test_relative_threshold(self):
        """Test eigenvalues below tol * lambda_max count as zero."""
        A = np.diag([1e-14, 1.0])
        assert not is_positive_definite(A, tol=1e-12)
        assert is_positive_definite(A, tol=1e-15)

    def test_require_raises_with_min_eigenvalue(self):
        """Test the error carries the offending eigenvalue."""
        with pytest.raises(NotPositiveDefiniteError) as info:
            require_positive_definite(np.diag([2.0, -0.5]))
        assert info.value.min_eigenvalue == pytest.approx(-0.5)

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds, dim=st.integers(min_value=1, max_value=6))
    def test_sqrt_squares_back(self, seed, dim):
        """Test sqrt(A)^2 == A and sqrt(A) inv_sqrt(A) == I."""
        A = random_spd(dim, seed)
        R = sqrt_spd(A)
        np.testing.assert_allclose(R @ R, A, atol=1e-11)
        np.testing.assert_allclose(R @ inv_sqrt_spd(A), np.eye(dim), atol=1e-11)
        np.testing.assert_allclose(R, R.T, atol=0)


class TestExpm:
    """Test suite for the matrix exponential."""

    def test_rotation(self):
        """Test expm of a skew generator is a rotation."""
        t = 0.7
        R = expm(np.array([[0.0, t], [-t, 0.0]]))
        np.testing.assert_allclose(
            R, [[np.cos(t), np.sin(t)], [-np.sin(t), np.cos(t)]], atol=1e-14
        )

    def test_group_law(self):
        """Test expm(A s) expm(A t) == expm(A (s + t))."""
        A = random_symmetric(4, 5)
        np.testing.assert_allclose(expm(0.3 * A) @ expm(0.4 * A), expm(0.7 * A), atol=1e-11)

    def test_complex_input(self):
        """Test complex generators stay complex."""
        out = expm(np.diag([1j * np.pi, 0.0]))
        np.testing.assert_allclose(out, np.diag([-1.0, 1.0]), atol=1e-14)


if __name__ == "__main__":
    pytest.main([__file__])
