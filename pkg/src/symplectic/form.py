"""
Symplectic Form
---------------
The standard symplectic form J = [[0, I], [-I, 0]] in (q-block, p-block)
ordering, the symplectic predicate, congruences and seeded random elements
of Sp(2n, R).
"""

from __future__ import annotations

from typing import Any, Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from ..errors import (
    DimensionMismatchError,
    InvalidParameterError,
    NotSymplecticError,
    OddDimensionError,
)
from ..kernel.linalg import as_matrix, expm, max_norm, require_square


class SymplecticForm(BaseModel):
    """Standard symplectic form for ``n`` degrees of freedom."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=1, description="Degrees of freedom")
    matrix: np.ndarray = Field(..., description="2n x 2n matrix J")


class SymplecticCheck(BaseModel):
    """Residual ``max|S^T J S - J|`` and the verdict at a tolerance."""

    model_config = ConfigDict(frozen=True)

    symplectic: bool
    residual: float
    tol: float

    def __bool__(self) -> bool:
        return self.symplectic

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()


def J_matrix(n: int) -> np.ndarray:
    if n < 1:
        raise InvalidParameterError(f"degrees of freedom must be >= 1, got {n}")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def standard_form(n: int) -> SymplecticForm:
    return SymplecticForm(n=n, matrix=J_matrix(n))


def half_dimension(A: np.ndarray, name: str = "matrix") -> int:
    """``n`` for a square 2n x 2n matrix; odd sizes are rejected."""
    size = require_square(A, name)
    if size == 0 or size % 2:
        raise OddDimensionError(f"{name} must have even dimension 2n, got {size}")
    return size // 2


def symplectic_residual(S: np.ndarray) -> float:
    n = half_dimension(S)
    J = J_matrix(n)
    return max_norm(S.T @ J @ S - J)


def is_symplectic(S: Any, tol: Optional[float] = None) -> SymplecticCheck:
    rel = get_settings().tol if tol is None else tol
    residual = symplectic_residual(as_matrix(S))
    return SymplecticCheck(symplectic=residual <= rel, residual=residual, tol=rel)


def require_symplectic(S: Any, tol: Optional[float] = None) -> np.ndarray:
    mat = as_matrix(S)
    check = is_symplectic(mat, tol)
    if not check:
        raise NotSymplecticError(
            f"matrix is not symplectic (residual {check.residual:.3e})", check.residual
        )
    return mat


def symplectic_congruence(M: Any, S: Any, tol: Optional[float] = None) -> np.ndarray:
    """``S^T M S`` for symplectic ``S``."""
    mat = as_matrix(M, "M")
    sym = require_symplectic(S, tol)
    if mat.shape != sym.shape:
        raise DimensionMismatchError(
            f"M is {mat.shape[0]}x{mat.shape[1]} but S is {sym.shape[0]}x{sym.shape[1]}"
        )
    out = sym.T @ mat @ sym
    return 0.5 * (out + out.T)


def random_symplectic(
    n: int, seed: Optional[int] = None, tau: float = 1.0
) -> np.ndarray:
    """``expm(J G tau)`` for a seeded random symmetric ``G``."""
    J = J_matrix(n)
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((2 * n, 2 * n))
    G = (X + X.T) / (2.0 * np.sqrt(2 * n))
    return expm(J @ G * tau)
