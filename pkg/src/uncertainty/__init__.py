"""
Robertson-Schrodinger checks for covariance matrices.
"""

from .relations import (
    CovarianceMatrix,
    UncertaintyReport,
    as_covariance,
    covariance_congruence,
    covariance_spectrum,
    delta_matrix,
    delta_prime_matrix,
    delta_spectrum,
    direct_tolerance,
    evolve_covariance,
    mode_conditions,
    psd_check_direct,
    rs_check,
)

__all__ = [
    "CovarianceMatrix",
    "UncertaintyReport",
    "as_covariance",
    "covariance_congruence",
    "covariance_spectrum",
    "delta_matrix",
    "delta_prime_matrix",
    "delta_spectrum",
    "direct_tolerance",
    "evolve_covariance",
    "mode_conditions",
    "psd_check_direct",
    "rs_check",
]
