"""
Trapped Ions
------------
Two ions of mass m in harmonic traps of frequency varpi centred at q01 and
q02 = q01 + d, interacting through ``C / |q1 - q2|``. The Coulomb term can be
kept in full or expanded to second order in the displacements.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import brentq

from ..errors import InvalidParameterError
from .hamiltonian import QuadraticHamiltonian
from .small_oscillations import SmoothField


class TrappedIons(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: float = Field(1.0, gt=0, description="Ion mass")
    varpi: float = Field(1.0, gt=0, description="Trap frequency")
    C: float = Field(2.0, description="Coupling K_e Q1 Q2 (negative attracts)")
    d: float = Field(2.0, gt=0, description="Distance between trap centres")
    q01: float = Field(0.0, description="Centre of the first trap")

    @property
    def q0(self) -> np.ndarray:
        return np.array([self.q01, self.q01 + self.d])

    @property
    def k(self) -> float:
        return self.m * self.varpi**2

    # -----------------------------
    # Second-order model
    # -----------------------------

    def potential_matrix(self) -> np.ndarray:
        c = 2.0 * self.C / self.d**3
        return np.array([[self.k + c, -c], [-c, self.k + c]])

    def kinetic_matrix(self) -> np.ndarray:
        return self.m * np.eye(2)

    def hamiltonian(self) -> QuadraticHamiltonian:
        """Second-order Hamiltonian in absolute coordinates (q1, q2, p1, p2)."""
        U = self.potential_matrix()
        pull = (self.C / self.d**2) * np.array([1.0, -1.0])
        q0 = self.q0
        hessian = np.zeros((4, 4))
        hessian[:2, :2] = U
        hessian[2:, 2:] = np.eye(2) / self.m
        xi = np.concatenate([pull - U @ q0, np.zeros(2)])
        h0 = 0.5 * q0 @ U @ q0 - pull @ q0 + self.C / self.d
        return QuadraticHamiltonian(hessian=hessian, xi=xi, h0=float(h0))

    def quadratic_equilibrium(self) -> np.ndarray:
        """``q0 - C m varpi^2 / (d^2 det U) (1, -1)``."""
        det_u = float(np.linalg.det(self.potential_matrix()))
        shift = self.C * self.k / (self.d**2 * det_u)
        return self.q0 - shift * np.array([1.0, -1.0])

    def quadratic_frequencies(self) -> np.ndarray:
        w2 = self.varpi**2 + 4.0 * self.C / (self.m * self.d**3)
        return np.sort(np.sqrt(np.array([self.varpi**2, w2], dtype=complex)).real)

    def stable(self) -> bool:
        return self.varpi**2 + 4.0 * self.C / (self.m * self.d**3) > 0.0

    def quadratic_field(self) -> SmoothField:
        d, C, k, m = self.d, self.C, self.k, self.m
        q0 = self.q0

        def value(x: np.ndarray) -> float:
            dq = x[:2] - q0
            s = dq[0] - dq[1]
            return float(
                0.5 * k * dq @ dq + C / d + C * s / d**2 + C * s**2 / d**3
                + 0.5 * x[2:] @ x[2:] / m
            )

        def gradient(x: np.ndarray) -> np.ndarray:
            dq = x[:2] - q0
            s = dq[0] - dq[1]
            f = C / d**2 + 2.0 * C * s / d**3
            return np.array([k * dq[0] + f, k * dq[1] - f, x[2] / m, x[3] / m])

        return SmoothField(value, gradient)

    # -----------------------------
    # Full Coulomb model
    # -----------------------------

    def coulomb_field(self) -> SmoothField:
        C, k, m = self.C, self.k, self.m
        q0 = self.q0

        def value(x: np.ndarray) -> float:
            dq = x[:2] - q0
            return float(
                0.5 * k * dq @ dq + C / abs(x[0] - x[1]) + 0.5 * x[2:] @ x[2:] / m
            )

        def gradient(x: np.ndarray) -> np.ndarray:
            dq = x[:2] - q0
            r = x[0] - x[1]
            f = -C * np.sign(r) / r**2
            return np.array([k * dq[0] + f, k * dq[1] - f, x[2] / m, x[3] / m])

        return SmoothField(value, gradient)

    def equilibrium_separation(self) -> float:
        """Root of the force balance ``r = d + 2C / (m varpi^2 r^2)``."""
        d, C, k = self.d, self.C, self.k

        def balance(r: float) -> float:
            return r - d - 2.0 * C / (k * r * r)

        if C == 0.0:
            return d
        if C > 0.0:
            return float(brentq(balance, d, d + 2.0 * C / (k * d * d), xtol=1e-15))
        r_min = (4.0 * abs(C) / k) ** (1.0 / 3.0)
        if r_min >= d or balance(r_min) > 0.0:
            raise InvalidParameterError("attraction too strong: no stable equilibrium")
        return float(brentq(balance, r_min, d, xtol=1e-15))

    def coulomb_equilibrium(self) -> np.ndarray:
        shift = 0.5 * (self.equilibrium_separation() - self.d)
        return self.q0 + shift * np.array([-1.0, 1.0])

    def coulomb_frequencies(self) -> Tuple[float, float]:
        r = self.equilibrium_separation()
        w2 = self.varpi**2 + 4.0 * self.C / (self.m * r**3)
        low, high = sorted((self.varpi, float(np.sqrt(w2))))
        return low, high
