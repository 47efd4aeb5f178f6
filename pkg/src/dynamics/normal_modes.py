"""
Normal-Mode Frames
------------------
For a positive-definite Hessian with Williamson form ``S_H H S_H^T = Lambda``
the canonical change of variables ``x' = S_H^-T x`` turns

    H(x) = 1/2 (x' - x'*).Lambda (x' - x'*) + H0'

into n uncoupled oscillators whose frequencies are the symplectic spectrum.
In those coordinates the flow is the rotation ``cos(Lambda t) + J sin(Lambda t)``.
"""

from __future__ import annotations

from typing import Any, Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..symplectic.form import J_matrix
from ..symplectic.williamson import williamson
from .hamiltonian import QuadraticHamiltonian, as_vector, fixed_point


class NormalModeFrame(BaseModel):
    """Williamson frame of a quadratic Hamiltonian with its fixed point."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    S_H: np.ndarray = Field(..., description="Symplectic S with S H S^T = Lambda")
    spectrum: np.ndarray = Field(..., description="Mode frequencies, ascending")
    x_star: np.ndarray = Field(..., description="Fixed point -H^-1 xi")
    x_star_prime: np.ndarray = Field(..., description="Fixed point in mode coordinates")
    h0_prime: float = Field(..., description="Energy at the fixed point")
    hessian: np.ndarray = Field(..., description="Hessian the frame was built from")

    @property
    def n(self) -> int:
        return int(self.spectrum.shape[0])

    @property
    def Lambda(self) -> np.ndarray:
        return np.diag(np.concatenate([self.spectrum, self.spectrum]))

    @property
    def S_H_inv_T(self) -> np.ndarray:
        """``S_H^-T = -J S_H J``."""
        J = J_matrix(self.n)
        return -J @ self.S_H @ J

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "frequencies": self.spectrum.tolist(),
            "x_star": self.x_star.tolist(),
            "x_star_prime": self.x_star_prime.tolist(),
            "h0_prime": self.h0_prime,
            "S_H": self.S_H.tolist(),
            "ordering": "qp-blocks",
        }


def normal_mode_frame(
    qh: QuadraticHamiltonian, positivity_tol: Optional[float] = None
) -> NormalModeFrame:
    result = williamson(qh.hessian, positivity_tol=positivity_tol)
    x_star = fixed_point(qh)
    J = J_matrix(qh.n)
    x_star_prime = -J @ result.S @ J @ x_star
    lam = np.concatenate([result.spectrum, result.spectrum])
    h0_prime = float(qh.h0 - 0.5 * x_star_prime @ (lam * x_star_prime))
    return NormalModeFrame(
        S_H=result.S,
        spectrum=result.spectrum,
        x_star=x_star,
        x_star_prime=x_star_prime,
        h0_prime=h0_prime,
        hessian=qh.hessian,
    )


def to_normal_modes(frame: NormalModeFrame, x: Any) -> np.ndarray:
    return frame.S_H_inv_T @ as_vector(x, 2 * frame.n)


def from_normal_modes(frame: NormalModeFrame, x_prime: Any) -> np.ndarray:
    return frame.S_H.T @ as_vector(x_prime, 2 * frame.n, "x_prime")


def mode_energies(frame: NormalModeFrame, x: Any) -> np.ndarray:
    """Per-mode energies ``mu_k/2 [(q'_k - q'*_k)^2 + (p'_k - p'*_k)^2]``."""
    d = to_normal_modes(frame, x) - frame.x_star_prime
    n = frame.n
    return 0.5 * frame.spectrum * (d[:n] ** 2 + d[n:] ** 2)


def normal_mode_propagator(frame: NormalModeFrame, t: float) -> np.ndarray:
    """``cos(Lambda t) + J sin(Lambda t)``, one rotation per mode."""
    angles = np.concatenate([frame.spectrum, frame.spectrum]) * float(t)
    return np.diag(np.cos(angles)) + J_matrix(frame.n) @ np.diag(np.sin(angles))


def mode_propagator(frame: NormalModeFrame, t: float) -> np.ndarray:
    """Phase-space propagator ``S_H^T S'_t S_H^-T`` assembled from the modes."""
    return frame.S_H.T @ normal_mode_propagator(frame, t) @ frame.S_H_inv_T


def evolve_via_modes(
    qh: QuadraticHamiltonian,
    x0: Any,
    t: float,
    frame: Optional[NormalModeFrame] = None,
) -> np.ndarray:
    if frame is None:
        frame = normal_mode_frame(qh)
    start = as_vector(x0, qh.dim, "x0")
    return mode_propagator(frame, t) @ (start - frame.x_star) + frame.x_star
