"""
Gaussian Thermodynamics
-----------------------
Canonical ensemble of a positive-definite quadratic Hamiltonian. Everything
depends on the symplectic spectrum mu and the fixed-point energy H0' only:

    ln Z = -beta H0' - sum_k ln(2 sinh(x_k)),    x_k = beta hbar mu_k / 2

U, F, S and C follow in closed form; the thermal covariance is assembled
from the Williamson frame of the Hessian.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate

from ..dynamics.hamiltonian import QuadraticHamiltonian
from ..dynamics.normal_modes import NormalModeFrame, normal_mode_frame
from ..errors import InvalidParameterError
from ..uncertainty.relations import CovarianceMatrix

logger = logging.getLogger("symplectica.statmech")

# exp() overflows beyond this
MAX_EXP = float(np.log(np.finfo(float).max))


class ThermalModel(BaseModel):
    """Quadratic Hamiltonian at inverse temperature ``beta``."""

    model_config = ConfigDict(frozen=True)

    qh: QuadraticHamiltonian
    beta: float = Field(..., gt=0, description="Inverse temperature, 1/energy")
    hbar: float = Field(1.0, gt=0, description="Reduced Planck constant")
    kB: float = Field(1.0, gt=0, description="Boltzmann constant")

    def at(self, beta: float) -> "ThermalModel":
        return self.model_copy(update={"beta": float(beta)})


class PartitionFunction(BaseModel):
    model_config = ConfigDict(frozen=True)

    log_z: float
    z: Optional[float] = Field(None, description="exp(log_z) when representable")

    @classmethod
    def from_log(cls, log_z: float) -> "PartitionFunction":
        z = float(np.exp(log_z)) if log_z < MAX_EXP else None
        return cls(log_z=float(log_z), z=z)


class ThermoReport(BaseModel):
    """Thermodynamic potentials; energies in units of H, S and C in units of kB."""

    model_config = ConfigDict(frozen=True)

    beta: float
    log_z: float
    z: Optional[float]
    U: float = Field(..., description="Internal energy")
    F: float = Field(..., description="Helmholtz free energy")
    S: float = Field(..., description="Entropy")
    C: float = Field(..., description="Heat capacity")
    occupations: List[float] = Field(..., description="Bosonic occupation per mode")
    classical: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


def _frame(model: ThermalModel, frame: Optional[NormalModeFrame]) -> NormalModeFrame:
    return normal_mode_frame(model.qh) if frame is None else frame


def _half_quanta(model: ThermalModel, frame: NormalModeFrame) -> np.ndarray:
    return 0.5 * model.beta * model.hbar * frame.spectrum


def log_two_sinh(x: np.ndarray) -> np.ndarray:
    """``ln(2 sinh x)`` for x > 0 without overflow."""
    return x + np.log(-np.expm1(-2.0 * x))


def csch_squared(x: np.ndarray) -> np.ndarray:
    e = np.exp(-2.0 * x)
    return 4.0 * e / np.expm1(-2.0 * x) ** 2


def occupations(
    model: ThermalModel, frame: Optional[NormalModeFrame] = None
) -> np.ndarray:
    """``1 / (exp(beta hbar mu) - 1)`` in ascending-frequency order."""
    frame = _frame(model, frame)
    return 1.0 / np.expm1(model.beta * model.hbar * frame.spectrum)


def partition_function(
    model: ThermalModel, frame: Optional[NormalModeFrame] = None
) -> PartitionFunction:
    frame = _frame(model, frame)
    x = _half_quanta(model, frame)
    log_z = -model.beta * frame.h0_prime - float(np.sum(log_two_sinh(x)))
    return PartitionFunction.from_log(log_z)


def classical_partition_function(
    model: ThermalModel, frame: Optional[NormalModeFrame] = None
) -> PartitionFunction:
    """``(beta hbar)^-n exp(-beta H0') / prod mu``."""
    frame = _frame(model, frame)
    log_z = (
        -frame.n * np.log(model.beta * model.hbar)
        - model.beta * frame.h0_prime
        - float(np.sum(np.log(frame.spectrum)))
    )
    return PartitionFunction.from_log(float(log_z))


def classical_partition_quadrature(
    model: ThermalModel, frame: Optional[NormalModeFrame] = None
) -> PartitionFunction:
    """``int exp(-beta H) dq dp / (2 pi hbar)`` by adaptive quadrature (n = 1)."""
    frame = _frame(model, frame)
    if frame.n != 1:
        raise InvalidParameterError("quadrature needs exactly one degree of freedom")
    H = model.qh.hessian
    beta = model.beta

    def integrand(p: float, q: float) -> float:
        y = np.array([q, p])
        return float(np.exp(-0.5 * beta * y @ H @ y))

    value, _ = integrate.dblquad(
        integrand, -np.inf, np.inf, -np.inf, np.inf, epsabs=0.0, epsrel=1e-10
    )
    log_z = np.log(value / (2.0 * np.pi * model.hbar)) - beta * frame.h0_prime
    return PartitionFunction.from_log(float(log_z))


def thermo_report(
    model: ThermalModel,
    frame: Optional[NormalModeFrame] = None,
    classical: bool = False,
) -> ThermoReport:
    frame = _frame(model, frame)
    x = _half_quanta(model, frame)
    hbar_mu = model.hbar * frame.spectrum
    pf = partition_function(model, frame)

    U = frame.h0_prime + float(np.sum(0.5 * hbar_mu / np.tanh(x)))
    F = -pf.log_z / model.beta
    S = model.kB * model.beta * (U - F)
    C = model.kB * float(np.sum(x**2 * csch_squared(x)))

    extra = None
    if classical:
        cpf = classical_partition_function(model, frame)
        U_c = frame.h0_prime + frame.n / model.beta
        F_c = -cpf.log_z / model.beta
        extra = {
            "log_z": cpf.log_z,
            "z": cpf.z,
            "U": U_c,
            "F": F_c,
            "S": model.kB * model.beta * (U_c - F_c),
            "C": model.kB * frame.n,
        }
    return ThermoReport(
        beta=model.beta,
        log_z=pf.log_z,
        z=pf.z,
        U=U,
        F=F,
        S=S,
        C=C,
        occupations=occupations(model, frame).tolist(),
        classical=extra,
    )


def thermo_table(
    model: ThermalModel, betas: Sequence[float], classical: bool = False
) -> List[ThermoReport]:
    """One report per inverse temperature, sharing a single Williamson frame."""
    frame = normal_mode_frame(model.qh)
    rows = []
    for beta in betas:
        if not beta > 0:
            raise InvalidParameterError(f"beta must be positive, got {beta}")
        rows.append(thermo_report(model.at(beta), frame, classical))
    logger.debug(f"thermo table rows={len(rows)}")
    return rows


def thermal_covariance(
    model: ThermalModel, frame: Optional[NormalModeFrame] = None
) -> np.ndarray:
    """``(hbar/2) S_H^T (N (+) N) S_H`` with ``N = diag(coth(beta hbar mu / 2))``."""
    frame = _frame(model, frame)
    x = _half_quanta(model, frame)
    coth = 1.0 / np.tanh(x)
    diag = 0.5 * model.hbar * np.concatenate([coth, coth])
    V = frame.S_H.T @ (diag[:, None] * frame.S_H)
    return 0.5 * (V + V.T)


def thermal_state(
    model: ThermalModel, frame: Optional[NormalModeFrame] = None
) -> CovarianceMatrix:
    """Thermal covariance centred on the fixed point."""
    frame = _frame(model, frame)
    return CovarianceMatrix(V=thermal_covariance(model, frame), mean=frame.x_star)
