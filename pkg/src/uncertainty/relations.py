"""
Uncertainty Relations
---------------------
Robertson-Schrodinger validation of covariance matrices. A covariance V is
admissible for a quantum state iff

    Delta = V + (i hbar / 2) J  >= 0

which, for V > 0, is the same as every symplectic eigenvalue of V being at
least hbar/2. Both routes are computed and reported; the direct Hermitian
route also covers singular (classical) covariances.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..dynamics.propagation import affine_flow
from ..errors import (
    DimensionMismatchError,
    InvalidParameterError,
    NonSymmetricError,
    NotPositiveDefiniteError,
    SingularCovarianceError,
)
from ..kernel.linalg import as_matrix, hermitian_defect, hermitian_eig, sym_eig
from ..symplectic.form import J_matrix, half_dimension, require_symplectic
from ..symplectic.williamson import symplectic_spectrum

logger = logging.getLogger("symplectica.uncertainty")

# saturated states must not be rejected for rounding
VALID_REL_TOL = 1e-9
SYMMETRY_TOL = 1e-8


def symmetric_covariance(V: Any) -> np.ndarray:
    mat = as_matrix(V, "V")
    half_dimension(mat, "V")
    defect = hermitian_defect(mat)
    if defect > SYMMETRY_TOL:
        raise NonSymmetricError(
            f"V is not symmetric (relative defect {defect:.3e})", {"defect": defect}
        )
    return 0.5 * (mat + mat.T)


class CovarianceMatrix(BaseModel):
    """Symmetric 2n x 2n covariance with an optional mean vector."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    V: np.ndarray = Field(..., description="Covariance matrix, qp-blocks ordering")
    mean: Optional[np.ndarray] = Field(None, description="Mean phase-space point")

    @model_validator(mode="before")
    @classmethod
    def check_shapes(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            V = symmetric_covariance(data.get("V"))
            data["V"] = V
            mean = data.get("mean")
            if mean is not None:
                mean = np.asarray(mean, dtype=float).reshape(-1)
                if mean.shape[0] != V.shape[0]:
                    raise DimensionMismatchError("mean length does not match V")
                data["mean"] = mean
        return data

    @property
    def n(self) -> int:
        return self.V.shape[0] // 2

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "n": self.n,
            "matrix": self.V.tolist(),
            "ordering": "qp-blocks",
        }
        if self.mean is not None:
            out["mean"] = self.mean.tolist()
        return out


class UncertaintyReport(BaseModel):
    """Verdicts of the symplectic and direct routes."""

    model_config = ConfigDict(frozen=True)

    hbar: float
    valid: bool = Field(..., description="Robertson-Schrodinger relation holds")
    symplectic_spectrum: Optional[List[float]] = Field(
        None, description="Symplectic eigenvalues of V; absent when V is singular"
    )
    min_mu: Optional[float] = None
    delta_min_eig: float = Field(
        ..., description="Smallest eigenvalue of V + (i hbar/2) J"
    )
    classical_ok: bool = Field(..., description="V is positive-semidefinite")
    routes_agree: bool

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()


def as_covariance(V: Any) -> CovarianceMatrix:
    if isinstance(V, CovarianceMatrix):
        return V
    return CovarianceMatrix(V=symmetric_covariance(V))


def delta_matrix(V: Any, hbar: float) -> np.ndarray:
    """Hermitian ``V + (i hbar / 2) J``."""
    cov = as_covariance(V)
    return cov.V + 0.5j * hbar * J_matrix(cov.n)


def psd_check_direct(V: Any, hbar: float) -> float:
    """Smallest Euclidean eigenvalue of ``V + (i hbar / 2) J``."""
    if hbar < 0:
        raise InvalidParameterError("hbar must be non-negative")
    return float(hermitian_eig(delta_matrix(V, hbar)).eigenvalues[0])


def covariance_spectrum(V: Any) -> np.ndarray:
    """Symplectic spectrum of ``V``; singular covariances have none."""
    cov = as_covariance(V)
    try:
        return symplectic_spectrum(cov.V)
    except NotPositiveDefiniteError as exc:
        raise SingularCovarianceError(
            "covariance is not positive-definite; only the direct route applies",
            {"min_eigenvalue": exc.min_eigenvalue},
        ) from exc


def delta_spectrum(V: Any, hbar: float) -> np.ndarray:
    """Eigenvalues ``mu_j -+ hbar/2`` of ``Lambda_V + (i hbar / 2) J``, ascending."""
    mu = symplectic_spectrum(as_covariance(V).V)
    return np.sort(np.concatenate([mu - 0.5 * hbar, mu + 0.5 * hbar]))


def delta_prime_matrix(mu: Any, hbar: float) -> np.ndarray:
    """``Lambda_V + (i hbar / 2) J`` for a given symplectic spectrum."""
    mu = np.asarray(mu, dtype=float).reshape(-1)
    lam = np.diag(np.concatenate([mu, mu]))
    return lam + 0.5j * hbar * J_matrix(mu.shape[0])


def mode_conditions(V: Any, hbar: float) -> np.ndarray:
    """Per-mode ``<dq^2><dp^2> - <dq dp>^2 - hbar^2/4``."""
    cov = as_covariance(V)
    n = cov.n
    q = np.diag(cov.V)[:n]
    p = np.diag(cov.V)[n:]
    qp = np.array([cov.V[k, n + k] for k in range(n)])
    return q * p - qp**2 - 0.25 * hbar**2


def direct_tolerance(lambda_max: float, hbar: float) -> float:
    """Slack on min eig(Delta) equivalent to a relative slack on min mu.

    For one mode min eig(Delta) ~ (mu^2 - hbar^2/4) / lambda_max(V), so
    ``mu >= (hbar/2)(1 - tol)`` maps to ``tol hbar^2 / (2 lambda_max)``.
    """
    return VALID_REL_TOL * hbar**2 / (2.0 * max(lambda_max, 0.5 * hbar))


def rs_check(V: Any, hbar: float = 1.0) -> UncertaintyReport:
    if not hbar > 0:
        raise InvalidParameterError("hbar must be positive")
    cov = as_covariance(V)
    scale = max(float(np.max(np.abs(cov.V))), hbar)

    euclidean = sym_eig(cov.V).eigenvalues
    delta_min = psd_check_direct(cov, hbar)
    direct_valid = bool(delta_min >= -direct_tolerance(float(euclidean[-1]), hbar))
    classical_ok = bool(float(euclidean[0]) >= -VALID_REL_TOL * scale)

    spectrum: Optional[np.ndarray]
    try:
        spectrum = covariance_spectrum(cov)
    except SingularCovarianceError:
        spectrum = None

    if spectrum is None:
        valid = direct_valid
        min_mu = None
        agree = True
    else:
        min_mu = float(spectrum[0])
        valid = bool(min_mu >= 0.5 * hbar * (1.0 - VALID_REL_TOL))
        agree = valid == direct_valid
        if not agree:
            logger.warning(
                f"uncertainty routes disagree: min_mu={min_mu:.17g} "
                f"delta_min={delta_min:.3e}"
            )
    return UncertaintyReport(
        hbar=hbar,
        valid=valid,
        symplectic_spectrum=None if spectrum is None else spectrum.tolist(),
        min_mu=min_mu,
        delta_min_eig=delta_min,
        classical_ok=classical_ok,
        routes_agree=agree,
    )


def covariance_congruence(V: Any, S: Any) -> CovarianceMatrix:
    """``V' = S V S^T`` and ``mean' = S mean`` for symplectic S."""
    cov = as_covariance(V)
    sym = require_symplectic(S)
    if sym.shape != cov.V.shape:
        raise DimensionMismatchError("S and V dimensions differ")
    mean = None if cov.mean is None else sym @ cov.mean
    return CovarianceMatrix(V=sym @ cov.V @ sym.T, mean=mean)


def evolve_covariance(V: Any, qh: Any, t: float) -> CovarianceMatrix:
    """Gaussian state transported by the flow of a quadratic Hamiltonian."""
    cov = as_covariance(V)
    S_t, shift = affine_flow(qh, t)
    mean = None if cov.mean is None else S_t @ cov.mean + shift
    return CovarianceMatrix(V=S_t @ cov.V @ S_t.T, mean=mean)
