"""
Quadratic-Hamiltonian dynamics: fixed points, propagators, normal modes,
ladder frames, small oscillations and the Lagrangian cross-check.
"""

from .hamiltonian import (
    QuadraticHamiltonian,
    energy,
    fixed_point,
    fixed_point_offset,
)
from .ions import TrappedIons
from .ladder import LadderFrame, complex_propagator, ladder_frame
from .lagrangian import lagrangian_modes, legendre_hessian
from .normal_modes import (
    NormalModeFrame,
    evolve_via_modes,
    from_normal_modes,
    mode_energies,
    mode_propagator,
    normal_mode_frame,
    normal_mode_propagator,
    to_normal_modes,
)
from .propagation import (
    Route,
    affine_flow,
    evolve,
    evolve_generic,
    propagator,
    time_grid,
    trajectory,
)
from .small_oscillations import SmallOscillationResult, SmoothField, small_oscillations

__all__ = [
    "LadderFrame",
    "NormalModeFrame",
    "QuadraticHamiltonian",
    "Route",
    "SmallOscillationResult",
    "SmoothField",
    "TrappedIons",
    "affine_flow",
    "complex_propagator",
    "energy",
    "evolve",
    "evolve_generic",
    "evolve_via_modes",
    "fixed_point",
    "fixed_point_offset",
    "from_normal_modes",
    "ladder_frame",
    "lagrangian_modes",
    "legendre_hessian",
    "mode_energies",
    "mode_propagator",
    "normal_mode_frame",
    "normal_mode_propagator",
    "small_oscillations",
    "time_grid",
    "to_normal_modes",
    "trajectory",
]
