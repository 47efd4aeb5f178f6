"""
Williamson Decomposition
------------------------
For a symmetric positive-definite 2n x 2n matrix M there is a symplectic S
with ``S M S^T = diag(mu_1..mu_n, mu_1..mu_n)``. The mu_j are the symplectic
spectrum of M; ``+-i mu_j`` are the eigenvalues of ``J M``.

Construction: with R = sqrt(M), the matrix ``K = R J R`` is real skew, so
``iK`` is Hermitian with eigenvalues in +-mu pairs. A unit eigenvector
``w = a + ib`` of ``+mu`` gives ``K u = mu v`` and ``K v = -mu u`` for
``u = sqrt(2) a`` and ``v = sqrt(2) b``. Stacking the rows (v_1..v_n,
u_1..u_n) into O gives ``O K O^T = Lambda J`` and
``S = sqrt(Lambda) O R^-1``.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from ..errors import VerificationFailedError
from ..kernel.linalg import (
    SpectralDecomposition,
    as_matrix,
    hermitian_eig,
    max_norm,
    require_positive_definite,
)
from .form import J_matrix, half_dimension, symplectic_residual

logger = logging.getLogger("symplectica.williamson")


class WilliamsonResult(BaseModel):
    """Symplectic diagonalizer ``S`` of ``matrix`` with its spectrum."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    S: np.ndarray = Field(..., description="Symplectic matrix with S M S^T = Lambda")
    spectrum: np.ndarray = Field(..., description="Symplectic eigenvalues, ascending")
    matrix: np.ndarray = Field(..., description="The decomposed matrix M")
    euclidean_spectrum: np.ndarray = Field(..., description="Eigenvalues of M")
    symplectic_residual: float = Field(..., description="max|S^T J S - J|")
    diagonal_residual: float = Field(..., description="max|S M S^T - Lambda| / max|M|")

    @property
    def n(self) -> int:
        return int(self.spectrum.shape[0])

    @property
    def Lambda(self) -> np.ndarray:
        return np.diag(np.concatenate([self.spectrum, self.spectrum]))

    @property
    def S_inv(self) -> np.ndarray:
        """``S^-1 = -J S^T J``, exact for symplectic S."""
        J = J_matrix(self.n)
        return -J @ self.S.T @ J

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "spectrum": self.spectrum.tolist(),
            "euclidean_spectrum": self.euclidean_spectrum.tolist(),
            "S": self.S.tolist(),
            "ordering": "qp-blocks",
            "residuals": {
                "symplectic": self.symplectic_residual,
                "diagonal": self.diagonal_residual,
            },
            "det_check": {
                "det_M": float(np.prod(self.euclidean_spectrum)),
                "prod_mu_squared": float(np.prod(self.spectrum) ** 2),
            },
        }


def _skew_pairs(
    M: np.ndarray, tol: Optional[float]
) -> Tuple[SpectralDecomposition, np.ndarray, np.ndarray, np.ndarray]:
    n = half_dimension(M, "M")
    eig = require_positive_definite(M, "M", tol)
    R = eig.apply(np.sqrt)
    R = 0.5 * (R + R.T)
    K = R @ J_matrix(n) @ R
    K = 0.5 * (K - K.T)
    pairs = hermitian_eig(1j * K)
    return eig, R, K, pairs


def symplectic_spectrum(M: Any, tol: Optional[float] = None) -> np.ndarray:
    """Ascending symplectic eigenvalues of a positive-definite matrix."""
    mat = as_matrix(M, "M")
    n = half_dimension(mat, "M")
    _, _, _, pairs = _skew_pairs(mat, tol)
    return pairs.eigenvalues[n:].copy()


def williamson(
    M: Any, tol: Optional[float] = None, positivity_tol: Optional[float] = None
) -> WilliamsonResult:
    """Symplectic diagonalization ``S M S^T = Lambda`` with verified residuals."""
    check_tol = get_settings().tol if tol is None else tol
    mat = as_matrix(M, "M")
    n = half_dimension(mat, "M")
    eig, R, K, pairs = _skew_pairs(mat, positivity_tol)

    mu = pairs.eigenvalues[n:].copy()
    W = pairs.eigenvectors[:, n:].copy()
    # make the largest component of Re w positive
    for j in range(n):
        w = W[:, j]
        k = int(np.argmax(np.abs(w)))
        W[:, j] = w * (np.conj(w[k]) / abs(w[k]))
    U = np.sqrt(2.0) * W.real
    V = np.sqrt(2.0) * W.imag

    O = np.vstack([V.T, U.T])
    block = O @ K @ O.T
    for j in range(n):
        if block[j, n + j] < 0.0:
            O[[j, n + j]] = O[[n + j, j]]
    R_inv = eig.apply(lambda lam: 1.0 / np.sqrt(lam))
    R_inv = 0.5 * (R_inv + R_inv.T)
    lam = np.concatenate([mu, mu])
    S = np.sqrt(lam)[:, None] * (O @ R_inv)

    sym_res = symplectic_residual(S)
    diag_res = max_norm(S @ mat @ S.T - np.diag(lam)) / max_norm(mat)
    scale = max(1.0, max_norm(S) ** 2)
    logger.debug(f"williamson n={n} residuals={sym_res:.3e},{diag_res:.3e}")
    if sym_res > check_tol * scale or diag_res > check_tol * scale:
        raise VerificationFailedError(
            "Williamson verification failed",
            {"symplectic_residual": sym_res, "diagonal_residual": diag_res},
        )
    return WilliamsonResult(
        S=S,
        spectrum=mu,
        matrix=mat,
        euclidean_spectrum=eig.eigenvalues.copy(),
        symplectic_residual=sym_res,
        diagonal_residual=diag_res,
    )
