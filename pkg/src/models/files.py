"""
File Schemas
------------
UTF-8 JSON documents read and written by the CLI. Matrices are row-major in
the (q_1..q_n, p_1..p_n) ordering, declared by ``"ordering": "qp-blocks"``.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, List, Literal, Optional, Type, TypeVar, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..dynamics.hamiltonian import QuadraticHamiltonian
from ..uncertainty.relations import CovarianceMatrix

logger = logging.getLogger("symplectica.models")

SYMMETRY_WARN = 1e-12
SYMMETRY_LIMIT = 1e-8

Ordering = Literal["qp-blocks"]
T = TypeVar("T", bound="JsonDocument")


def dumps(payload: Any) -> str:
    """Canonical JSON: sorted keys, shortest round-trip floats, no NaN."""
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _square(rows: List[List[float]], size: int, name: str) -> np.ndarray:
    arr = np.asarray(rows, dtype=float)
    if arr.shape != (size, size):
        raise ValueError(f"{name} must be {size}x{size}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _symmetrize(arr: np.ndarray, name: str) -> np.ndarray:
    scale = float(np.max(np.abs(arr))) or 1.0
    defect = float(np.max(np.abs(arr - arr.T))) / scale
    if defect > SYMMETRY_LIMIT:
        raise ValueError(f"{name} is not symmetric (relative defect {defect:.3e})")
    if defect > SYMMETRY_WARN:
        logger.warning(f"{name} symmetrized on load (relative defect {defect:.3e})")
    return 0.5 * (arr + arr.T)


class JsonDocument(BaseModel):
    """Shared JSON helpers."""

    model_config = ConfigDict(extra="forbid")

    def to_json(self) -> str:
        return dumps(self.model_dump(exclude_none=True))

    @classmethod
    def from_json(cls: Type[T], text: Union[str, bytes]) -> T:
        return cls.model_validate_json(text)

    @classmethod
    def load(cls: Type[T], path: Union[str, Path]) -> T:
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")


class ModelFile(JsonDocument):
    """Quadratic Hamiltonian ``1/2 x.Hx + x.xi + h0`` with its physical constants."""

    n: int = Field(..., ge=1, description="Degrees of freedom")
    hbar: float = Field(1.0, gt=0)
    kB: float = Field(1.0, gt=0)
    hessian: List[List[float]]
    xi: Optional[List[float]] = None
    h0: float = 0.0
    labels: Optional[List[str]] = None
    ordering: Ordering = "qp-blocks"
    description: Optional[str] = None

    @model_validator(mode="after")
    def check_dimensions(self) -> "ModelFile":
        size = 2 * self.n
        arr = _symmetrize(_square(self.hessian, size, "hessian"), "hessian")
        self.hessian = arr.tolist()
        if self.xi is not None and len(self.xi) != size:
            raise ValueError(f"xi must have length {size}, got {len(self.xi)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"labels must name {self.n} modes, got {len(self.labels)}")
        return self

    def hamiltonian(self) -> QuadraticHamiltonian:
        return QuadraticHamiltonian(hessian=self.hessian, xi=self.xi, h0=self.h0)

    @classmethod
    def from_hamiltonian(
        cls, qh: QuadraticHamiltonian, hbar: float = 1.0, kB: float = 1.0, **kwargs: Any
    ) -> "ModelFile":
        xi = qh.xi.tolist() if np.any(qh.xi) else None
        return cls(
            n=qh.n,
            hbar=hbar,
            kB=kB,
            hessian=qh.hessian.tolist(),
            xi=xi,
            h0=qh.h0,
            **kwargs,
        )


class CovarianceFile(JsonDocument):
    """Covariance matrix V with optional mean."""

    n: int = Field(..., ge=1)
    hbar: float = Field(1.0, gt=0)
    matrix: List[List[float]]
    mean: Optional[List[float]] = None
    ordering: Ordering = "qp-blocks"
    description: Optional[str] = None

    @model_validator(mode="after")
    def check_dimensions(self) -> "CovarianceFile":
        size = 2 * self.n
        arr = _symmetrize(_square(self.matrix, size, "matrix"), "matrix")
        self.matrix = arr.tolist()
        if self.mean is not None and len(self.mean) != size:
            raise ValueError(f"mean must have length {size}, got {len(self.mean)}")
        return self

    def covariance(self) -> CovarianceMatrix:
        return CovarianceMatrix(V=self.matrix, mean=self.mean)

    @classmethod
    def from_covariance(
        cls, cov: CovarianceMatrix, hbar: float = 1.0, **kwargs: Any
    ) -> "CovarianceFile":
        mean = None if cov.mean is None else cov.mean.tolist()
        return cls(n=cov.n, hbar=hbar, matrix=cov.V.tolist(), mean=mean, **kwargs)


class MatrixFile(JsonDocument):
    """A bare square matrix, e.g. a candidate symplectic matrix."""

    matrix: List[List[float]]
    ordering: Ordering = "qp-blocks"
    description: Optional[str] = None

    @field_validator("matrix")
    @classmethod
    def check_square(cls, v: List[List[float]]) -> List[List[float]]:
        if not v:
            raise ValueError("matrix must not be empty")
        _square(v, len(v), "matrix")
        return v

    def array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=float)
