"""
Thermodynamics of positive-definite quadratic Hamiltonians.
"""

from .thermo import (
    PartitionFunction,
    ThermalModel,
    ThermoReport,
    classical_partition_function,
    classical_partition_quadrature,
    occupations,
    partition_function,
    thermal_covariance,
    thermal_state,
    thermo_report,
    thermo_table,
)

__all__ = [
    "PartitionFunction",
    "ThermalModel",
    "ThermoReport",
    "classical_partition_function",
    "classical_partition_quadrature",
    "occupations",
    "partition_function",
    "thermal_covariance",
    "thermal_state",
    "thermo_report",
    "thermo_table",
]
