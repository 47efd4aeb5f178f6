"""
Ladder (Complex) Frame
----------------------
Complex phase-space coordinates ``z = W Z x`` with

    W = 1/sqrt(2) [[I, iI], [iI, I]],   Z = diag(sqrt(m w), 1/sqrt(m w))

so each pair (z_k, z_{n+k}) is (a_k, i a_k^dagger) for dimensionless
quadratures. The Bogoliubov matrix ``S~ = W S_H Z W*`` satisfies
``S~ H~ S~^dagger = Lambda`` for ``H~ = (W Z^-1) H (W Z^-1)^dagger``.
"""

from __future__ import annotations

from typing import Any, Dict, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import DimensionMismatchError, InvalidParameterError
from .normal_modes import NormalModeFrame, normal_mode_propagator


class LadderFrame(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    W: np.ndarray = Field(..., description="Unitary symmetric complexification")
    Z: np.ndarray = Field(..., description="Diagonal symplectic rescaling")
    bogoliubov: np.ndarray = Field(..., description="S~ = W S_H Z W*")
    complex_hessian: np.ndarray = Field(..., description="(W Z^-1) H (W Z^-1)^dagger")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "W_real": self.W.real.tolist(),
            "W_imag": self.W.imag.tolist(),
            "Z": np.diag(self.Z).tolist(),
            "bogoliubov_real": self.bogoliubov.real.tolist(),
            "bogoliubov_imag": self.bogoliubov.imag.tolist(),
        }


def complexifier(n: int) -> np.ndarray:
    eye = np.eye(n)
    return np.block([[eye, 1j * eye], [1j * eye, eye]]) / np.sqrt(2.0)


def ladder_frame(
    frame: NormalModeFrame, masses: Sequence[float], frequencies: Sequence[float]
) -> LadderFrame:
    n = frame.n
    m = np.asarray(masses, dtype=float).reshape(-1)
    w = np.asarray(frequencies, dtype=float).reshape(-1)
    if m.shape[0] != n or w.shape[0] != n:
        raise DimensionMismatchError(f"need {n} masses and {n} frequencies")
    if np.any(m <= 0) or np.any(w <= 0) or not np.all(np.isfinite(m * w)):
        raise InvalidParameterError("masses and frequencies must be positive")

    scale = np.sqrt(m * w)
    Z = np.diag(np.concatenate([scale, 1.0 / scale]))
    Z_inv = np.diag(np.concatenate([1.0 / scale, scale]))
    W = complexifier(n)
    W_star = W.conj()
    bogoliubov = W @ frame.S_H @ Z @ W_star
    WZ = W @ Z_inv
    complex_hessian = WZ @ frame.hessian @ WZ.conj().T
    return LadderFrame(W=W, Z=Z, bogoliubov=bogoliubov, complex_hessian=complex_hessian)


def complex_propagator(
    ladder: LadderFrame, frame: NormalModeFrame, t: float
) -> np.ndarray:
    """``W S'_t W*``, equal to ``diag(e^{-i mu t}, e^{+i mu t})``."""
    return ladder.W @ normal_mode_propagator(frame, t) @ ladder.W.conj()
