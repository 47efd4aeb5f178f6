"""
Quadratic Hamiltonians
----------------------
``H(x) = 1/2 x.Hx + x.xi + H0`` on phase space x = (q_1..q_n, p_1..p_n).
"""

from __future__ import annotations

import logging
from typing import Any, Dict

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import get_settings
from ..errors import DimensionMismatchError, InvalidMatrixError, SingularHessianError
from ..kernel.linalg import as_matrix, hermitian_defect, sym_eig
from ..symplectic.form import half_dimension

logger = logging.getLogger("symplectica.dynamics")

# asymmetry above this is reported; above ASYMMETRY_LIMIT it is an error
ASYMMETRY_WARN = 1e-12
ASYMMETRY_LIMIT = 1e-8


def symmetrized(A: Any, name: str = "hessian") -> np.ndarray:
    """Symmetric part of ``A``; rejects matrices far from symmetric."""
    mat = as_matrix(A, name)
    half_dimension(mat, name)
    defect = hermitian_defect(mat)
    if defect > ASYMMETRY_LIMIT:
        raise InvalidMatrixError(
            f"{name} is not symmetric (relative defect {defect:.3e})",
            {"defect": defect},
        )
    if defect > ASYMMETRY_WARN:
        logger.warning(f"{name} symmetrized (relative defect {defect:.3e})")
    return 0.5 * (mat + mat.T)


def as_vector(x: Any, size: int, name: str = "x") -> np.ndarray:
    vec = np.array(x, dtype=float, copy=True).reshape(-1)
    if vec.shape[0] != size:
        raise DimensionMismatchError(
            f"{name} has length {vec.shape[0]}, expected {size}"
        )
    if not np.all(np.isfinite(vec)):
        raise InvalidMatrixError(f"{name} contains NaN or Inf entries")
    return vec


class QuadraticHamiltonian(BaseModel):
    """Hessian, linear term and offset of a quadratic Hamiltonian."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    hessian: np.ndarray = Field(..., description="Symmetric 2n x 2n Hessian H")
    xi: np.ndarray = Field(..., description="Linear term, length 2n")
    h0: float = Field(0.0, description="Constant offset H0")

    @model_validator(mode="before")
    @classmethod
    def fill_defaults(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            hessian = symmetrized(data.get("hessian"))
            data["hessian"] = hessian
            xi = data.get("xi")
            size = hessian.shape[0]
            data["xi"] = np.zeros(size) if xi is None else as_vector(xi, size, "xi")
        return data

    @field_validator("h0")
    @classmethod
    def finite_offset(cls, v: float) -> float:
        if not np.isfinite(v):
            raise ValueError("h0 must be finite")
        return float(v)

    @property
    def n(self) -> int:
        return self.hessian.shape[0] // 2

    @property
    def dim(self) -> int:
        return self.hessian.shape[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "hessian": self.hessian.tolist(),
            "xi": self.xi.tolist(),
            "h0": self.h0,
            "ordering": "qp-blocks",
        }


def energy(qh: QuadraticHamiltonian, x: Any) -> float:
    vec = as_vector(x, qh.dim)
    return float(0.5 * vec @ qh.hessian @ vec + vec @ qh.xi + qh.h0)


def fixed_point(qh: QuadraticHamiltonian) -> np.ndarray:
    """``x* = -H^-1 xi``; singular Hessians must use ``evolve_generic``."""
    eig = sym_eig(qh.hessian)
    lam = eig.eigenvalues
    scale = float(np.max(np.abs(lam)))
    smallest = float(np.min(np.abs(lam)))
    if scale == 0.0 or smallest <= get_settings().positivity_tol * scale:
        raise SingularHessianError(
            "Hessian is singular; no unique fixed point (use evolve_generic)",
            {"min_abs_eigenvalue": smallest},
        )
    return -(eig.apply(lambda v: 1.0 / v) @ qh.xi)


def fixed_point_offset(qh: QuadraticHamiltonian) -> float:
    """Energy at the fixed point, ``H0 - 1/2 xi.H^-1 xi``."""
    x_star = fixed_point(qh)
    return float(qh.h0 + 0.5 * qh.xi @ x_star)
