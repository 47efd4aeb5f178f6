"""
Small Oscillations
------------------
Second-order expansion of a smooth Hamiltonian about a fixed point:

    H(x) ~ H(x*) + 1/2 (x - x*).H* (x - x*),   grad H(x*) = 0

The fixed point is found with damped Newton steps from a caller's guess;
derivatives are analytic when supplied and central differences otherwise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import NoConvergenceError, SingularJacobianError
from ..kernel.linalg import EPS, is_positive_definite, sym_eig
from .hamiltonian import QuadraticHamiltonian, as_vector

logger = logging.getLogger("symplectica.dynamics")

MAX_NEWTON_STEPS = 100
MAX_HALVINGS = 20

ValueFn = Callable[[np.ndarray], float]
Gradient = Callable[[np.ndarray], np.ndarray]


def fd_steps(x: np.ndarray, power: float = 1.0 / 3.0) -> np.ndarray:
    """Per-coordinate steps ``max(1, |x_i|) * eps**power``."""
    return np.maximum(1.0, np.abs(x)) * EPS**power


@dataclass
class SmoothField:
    """Scalar field on phase space with optional analytic gradient."""

    value: ValueFn
    gradient_fn: Optional[Gradient] = None

    def __call__(self, x: np.ndarray) -> float:
        return float(self.value(np.asarray(x, dtype=float)))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.gradient_fn is not None:
            return np.asarray(self.gradient_fn(x), dtype=float).reshape(-1)
        return self.numeric_gradient(x)

    def numeric_gradient(self, x: np.ndarray) -> np.ndarray:
        h = fd_steps(x)
        g = np.empty_like(x)
        for i in range(x.shape[0]):
            e = np.zeros_like(x)
            e[i] = h[i]
            g[i] = (self(x + e) - self(x - e)) / (2.0 * h[i])
        return g

    def hessian(self, x: np.ndarray) -> np.ndarray:
        """Central-difference Hessian, symmetrized."""
        x = np.asarray(x, dtype=float)
        dim = x.shape[0]
        H = np.empty((dim, dim))
        if self.gradient_fn is not None:
            h = fd_steps(x)
            for i in range(dim):
                e = np.zeros(dim)
                e[i] = h[i]
                H[:, i] = (self.gradient(x + e) - self.gradient(x - e)) / (2.0 * h[i])
        else:
            h = fd_steps(x, 0.25)
            for i in range(dim):
                for j in range(i, dim):
                    ei = np.zeros(dim)
                    ej = np.zeros(dim)
                    ei[i] = h[i]
                    ej[j] = h[j]
                    H[i, j] = (
                        self(x + ei + ej)
                        - self(x + ei - ej)
                        - self(x - ei + ej)
                        + self(x - ei - ej)
                    ) / (4.0 * h[i] * h[j])
                    H[j, i] = H[i, j]
        return 0.5 * (H + H.T)


class SmallOscillationResult(BaseModel):
    """Fixed point and the quadratic Hamiltonian in displacement coordinates."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fixed_point: np.ndarray
    hamiltonian: QuadraticHamiltonian = Field(
        ..., description="Expansion in x - x*; its linear term is zero"
    )
    positive_definite: bool = Field(..., description="Whether H* is positive-definite")
    gradient_norm: float
    iterations: int

    def absolute(self) -> QuadraticHamiltonian:
        """The same expansion written in the original coordinates x."""
        H = self.hamiltonian.hessian
        x_star = self.fixed_point
        return QuadraticHamiltonian(
            hessian=H,
            xi=-(H @ x_star),
            h0=self.hamiltonian.h0 + 0.5 * float(x_star @ H @ x_star),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fixed_point": self.fixed_point.tolist(),
            "hessian": self.hamiltonian.hessian.tolist(),
            "h0": self.hamiltonian.h0,
            "positive_definite": self.positive_definite,
            "gradient_norm": self.gradient_norm,
            "iterations": self.iterations,
        }


def _newton_step(H: np.ndarray, g: np.ndarray) -> np.ndarray:
    eig = sym_eig(H)
    lam = eig.eigenvalues
    scale = float(np.max(np.abs(lam)))
    if scale == 0.0 or float(np.min(np.abs(lam))) <= 1e3 * EPS * scale:
        raise SingularJacobianError(
            "Hessian is singular at the Newton iterate",
            {"min_abs_eigenvalue": float(np.min(np.abs(lam)))},
        )
    return -(eig.apply(lambda v: 1.0 / v) @ g)


def newton_target(hessian: np.ndarray, x: np.ndarray, tol: float) -> float:
    """Gradient norm below which the Newton step is within ``tol`` of x."""
    curvature = max(1.0, float(np.max(np.abs(hessian))))
    return tol * curvature * max(1.0, float(np.max(np.abs(x))))


def small_oscillations(
    field: SmoothField,
    guess: Any,
    tol: float = 1e-8,
    max_steps: int = MAX_NEWTON_STEPS,
) -> SmallOscillationResult:
    x = as_vector(guess, int(np.size(guess)), "guess")
    g = field.gradient(x)
    residual = float(np.linalg.norm(g))
    hessian = field.hessian(x)

    steps = 0
    while residual > newton_target(hessian, x, tol):
        if steps >= max_steps:
            raise NoConvergenceError(
                f"Newton did not converge in {max_steps} steps",
                {"gradient_norm": residual},
            )
        steps += 1
        delta = _newton_step(hessian, g)
        factor = 1.0
        for _ in range(MAX_HALVINGS + 1):
            trial = x + factor * delta
            g_trial = field.gradient(trial)
            r_trial = float(np.linalg.norm(g_trial))
            if np.isfinite(r_trial) and r_trial < residual:
                break
            factor *= 0.5
        else:
            raise NoConvergenceError(
                "Newton step made no progress after damping",
                {"gradient_norm": residual, "iterations": steps},
            )
        x, g, residual = trial, g_trial, r_trial
        hessian = field.hessian(x)
        logger.debug(f"newton step={steps} factor={factor:g} |grad|={residual:.3e}")

    quad = QuadraticHamiltonian(hessian=hessian, h0=field(x))
    return SmallOscillationResult(
        fixed_point=x,
        hamiltonian=quad,
        positive_definite=bool(is_positive_definite(hessian)),
        gradient_norm=residual,
        iterations=steps,
    )
