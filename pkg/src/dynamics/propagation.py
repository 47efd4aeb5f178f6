"""
Phase-Space Propagation
-----------------------
Exact flows of ``dx/dt = J(Hx + xi)``:

* ``propagator``      S_t = expm(J H t)
* ``evolve``          x(t) = S_t (x0 - x*) + x*   (nonsingular H)
* ``evolve_generic``  x(t) = S_t x0 + int_0^t S_tau d tau J xi, any H, taken
                      from the top-right block of an augmented exponential
* ``trajectory``      sampled rows for any of the three routes
"""

from __future__ import annotations

import logging
from enum import Enum
from functools import partial
from typing import Any, List, Sequence, Tuple

import numpy as np

from ..kernel.linalg import expm
from ..symplectic.form import J_matrix
from .hamiltonian import QuadraticHamiltonian, as_vector, energy, fixed_point
from .normal_modes import evolve_via_modes, normal_mode_frame

logger = logging.getLogger("symplectica.dynamics")


class Route(str, Enum):
    """Propagation routes exposed by the CLI."""

    EXPM = "expm"
    MODES = "modes"
    GENERIC = "generic"


def generator(qh: QuadraticHamiltonian) -> np.ndarray:
    """Hamiltonian matrix ``J H``."""
    return J_matrix(qh.n) @ qh.hessian


def propagator(qh: QuadraticHamiltonian, t: float) -> np.ndarray:
    return expm(generator(qh) * float(t))


def affine_flow(qh: QuadraticHamiltonian, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """``(S_t, d_t)`` with ``x(t) = S_t x0 + d_t``."""
    dim = qh.dim
    aug = np.zeros((dim + 1, dim + 1))
    aug[:dim, :dim] = generator(qh)
    aug[:dim, dim] = J_matrix(qh.n) @ qh.xi
    flow = expm(aug * float(t))
    return flow[:dim, :dim], flow[:dim, dim]


def evolve(qh: QuadraticHamiltonian, x0: Any, t: float) -> np.ndarray:
    start = as_vector(x0, qh.dim, "x0")
    x_star = fixed_point(qh)
    return propagator(qh, t) @ (start - x_star) + x_star


def evolve_generic(qh: QuadraticHamiltonian, x0: Any, t: float) -> np.ndarray:
    start = as_vector(x0, qh.dim, "x0")
    S_t, shift = affine_flow(qh, t)
    return S_t @ start + shift


def time_grid(t_max: float, steps: int) -> np.ndarray:
    """``steps + 1`` equally spaced samples on [0, t_max]."""
    if steps < 1:
        return np.array([0.0])
    return np.linspace(0.0, float(t_max), int(steps) + 1)


def trajectory(
    qh: QuadraticHamiltonian,
    x0: Any,
    times: Sequence[float],
    route: Route = Route.EXPM,
) -> List[List[float]]:
    """Rows ``[t, x_1..x_2n, energy]`` along the chosen route."""
    route = Route(route)
    rows: List[List[float]] = []
    if route is Route.MODES:
        frame = normal_mode_frame(qh)
        step = partial(evolve_via_modes, qh, x0, frame=frame)
    elif route is Route.GENERIC:
        step = partial(evolve_generic, qh, x0)
    else:
        step = partial(evolve, qh, x0)
    for t in times:
        x = step(float(t))
        rows.append([float(t), *map(float, x), energy(qh, x)])
    logger.debug(f"trajectory route={route.value} samples={len(rows)}")
    return rows
