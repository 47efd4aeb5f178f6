"""
Dense Linear Algebra Kernel
---------------------------
Matrix primitives the rest of the toolkit builds on: cyclic Jacobi
eigensolvers for real symmetric and complex Hermitian matrices, the principal
square root of a positive-definite matrix, the matrix exponential and
positivity predicates.

All functions are pure; inputs are copied before any in-place work.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional

import numpy as np
import scipy.linalg
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from ..errors import (
    InvalidMatrixError,
    NonConvergentError,
    NonHermitianError,
    NonSquareError,
    NonSymmetricError,
    NotPositiveDefiniteError,
)

logger = logging.getLogger("symplectica.kernel")

EPS = float(np.finfo(float).eps)


# =============================================================
# Validation helpers
# =============================================================


def as_matrix(A: Any, name: str = "matrix", complex_ok: bool = False) -> np.ndarray:
    """Return a finite 2-D float (or complex) copy of ``A``."""
    arr = np.array(A, dtype=complex if complex_ok else None, copy=True)
    if arr.ndim != 2:
        raise InvalidMatrixError(f"{name} must be two-dimensional, got ndim={arr.ndim}")
    if np.iscomplexobj(arr):
        if not complex_ok:
            raise InvalidMatrixError(f"{name} must be real")
    else:
        arr = arr.astype(float)
    if not np.all(np.isfinite(arr)):
        raise InvalidMatrixError(f"{name} contains NaN or Inf entries")
    return arr


def require_square(A: np.ndarray, name: str = "matrix") -> int:
    rows, cols = A.shape
    if rows != cols:
        raise NonSquareError(f"{name} must be square, got {rows}x{cols}")
    return rows


def max_norm(A: np.ndarray) -> float:
    """Largest absolute entry (0 for an empty matrix)."""
    return float(np.max(np.abs(A))) if A.size else 0.0


def hermitian_defect(A: np.ndarray) -> float:
    """Relative size of the anti-Hermitian part, measured in the max norm."""
    scale = max_norm(A)
    if scale == 0.0:
        return 0.0
    return max_norm(A - A.conj().T) / scale


# =============================================================
# Spectral decomposition
# =============================================================


class SpectralDecomposition(BaseModel):
    """Ascending eigenvalues with orthonormal (unitary) eigenvector columns."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: np.ndarray = Field(..., description="Real eigenvalues, ascending")
    eigenvectors: np.ndarray = Field(..., description="Eigenvectors as columns")
    sweeps: int = Field(0, ge=0, description="Jacobi sweeps used")

    def reconstruct(self) -> np.ndarray:
        Q = self.eigenvectors
        return (Q * self.eigenvalues) @ Q.conj().T

    def apply(self, fn: Any) -> np.ndarray:
        """Matrix function ``Q fn(λ) Q^H``."""
        Q = self.eigenvectors
        return (Q * fn(self.eigenvalues)) @ Q.conj().T

    def to_dict(self) -> Dict[str, Any]:
        vecs = self.eigenvectors
        out: Dict[str, Any] = {"eigenvalues": self.eigenvalues.tolist()}
        if np.iscomplexobj(vecs):
            out["eigenvectors_real"] = vecs.real.tolist()
            out["eigenvectors_imag"] = vecs.imag.tolist()
        else:
            out["eigenvectors"] = vecs.tolist()
        return out


def _fix_phases(V: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real and positive."""
    for k in range(V.shape[1]):
        col = V[:, k]
        j = int(np.argmax(np.abs(col)))
        pivot = col[j]
        if pivot != 0:
            V[:, k] = col * (np.conj(pivot) / abs(pivot))
    return V


def _jacobi(A: np.ndarray, max_sweeps: int) -> SpectralDecomposition:
    """Cyclic Jacobi on a Hermitian (or real symmetric) matrix."""
    n = A.shape[0]
    A = 0.5 * (A + A.conj().T)
    V = np.eye(n, dtype=A.dtype)
    scale = float(np.linalg.norm(A))
    target = 10.0 * max(n, 1) * EPS * scale

    sweeps = 0
    while True:
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= target or n < 2:
            break
        if sweeps >= max_sweeps:
            raise NonConvergentError(
                f"Jacobi did not converge in {max_sweeps} sweeps",
                {"off_diagonal_norm": off},
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = abs(apq)
                if r <= EPS * 1e-3 * scale:
                    continue
                phase = apq / r
                app = A[p, p].real
                aqq = A[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # D = diag(1, conj(phase)) makes the pivot real; P rotates it away
                G = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                pq = [p, q]
                A[:, pq] = A[:, pq] @ G
                A[pq, :] = G.conj().T @ A[pq, :]
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                V[:, pq] = V[:, pq] @ G

    logger.debug(f"jacobi n={n} sweeps={sweeps}")
    eigenvalues = np.real(np.diag(A)).copy()
    order = np.argsort(eigenvalues, kind="stable")
    vectors = _fix_phases(V[:, order].copy())
    return SpectralDecomposition(
        eigenvalues=eigenvalues[order], eigenvectors=vectors, sweeps=sweeps
    )


def sym_eig(A: Any, symmetry_tol: Optional[float] = None) -> SpectralDecomposition:
    """Eigendecomposition of a real symmetric matrix."""
    settings = get_settings()
    M = as_matrix(A)
    require_square(M)
    tol = settings.symmetry_tol if symmetry_tol is None else symmetry_tol
    defect = hermitian_defect(M)
    if defect > tol:
        raise NonSymmetricError(
            f"matrix is not symmetric (relative defect {defect:.3e})",
            {"defect": defect},
        )
    return _jacobi(M, settings.max_sweeps)


def hermitian_eig(
    A: Any, symmetry_tol: Optional[float] = None
) -> SpectralDecomposition:
    """Eigendecomposition of a complex Hermitian matrix (complex eigenvectors)."""
    settings = get_settings()
    M = as_matrix(A, complex_ok=True)
    require_square(M)
    tol = settings.symmetry_tol if symmetry_tol is None else symmetry_tol
    defect = hermitian_defect(M)
    if defect > tol:
        raise NonHermitianError(
            f"matrix is not Hermitian (relative defect {defect:.3e})",
            {"defect": defect},
        )
    return _jacobi(M, settings.max_sweeps)


# =============================================================
# Positivity and square roots
# =============================================================


class PositivityReport(BaseModel):
    """Outcome of a positive-definiteness test."""

    model_config = ConfigDict(frozen=True)

    positive: bool
    min_eigenvalue: float
    max_eigenvalue: float

    def __bool__(self) -> bool:
        return self.positive


def is_positive_definite(A: Any, tol: Optional[float] = None) -> PositivityReport:
    """True iff ``λ_min > tol·λ_max`` and ``λ_max > 0``."""
    rel = get_settings().positivity_tol if tol is None else tol
    eig = sym_eig(A)
    lo = float(eig.eigenvalues[0])
    hi = float(eig.eigenvalues[-1])
    return PositivityReport(
        positive=bool(hi > 0.0 and lo > rel * hi), min_eigenvalue=lo, max_eigenvalue=hi
    )


def require_positive_definite(
    A: Any, name: str = "matrix", tol: Optional[float] = None
) -> SpectralDecomposition:
    """Eigendecomposition of ``A``, raising unless it is positive-definite."""
    rel = get_settings().positivity_tol if tol is None else tol
    eig = sym_eig(A)
    lo = float(eig.eigenvalues[0])
    hi = float(eig.eigenvalues[-1])
    if not (hi > 0.0 and lo > rel * hi):
        logger.info(f"{name} rejected: min eigenvalue {lo:.6g}")
        raise NotPositiveDefiniteError(
            f"{name} is not positive-definite (min eigenvalue {lo:.6g})", lo
        )
    return eig


def sqrt_spd(A: Any, tol: Optional[float] = None) -> np.ndarray:
    """Principal square root of a symmetric positive-definite matrix."""
    eig = require_positive_definite(A, tol=tol)
    R = eig.apply(np.sqrt)
    return 0.5 * (R + R.T)


def inv_sqrt_spd(A: Any, tol: Optional[float] = None) -> np.ndarray:
    eig = require_positive_definite(A, tol=tol)
    R = eig.apply(lambda lam: 1.0 / np.sqrt(lam))
    return 0.5 * (R + R.T)


# =============================================================
# Matrix exponential
# =============================================================


def expm(A: Any) -> np.ndarray:
    """Matrix exponential (Padé scaling-and-squaring)."""
    M = as_matrix(A, complex_ok=np.iscomplexobj(np.asarray(A)))
    require_square(M)
    return scipy.linalg.expm(M)
