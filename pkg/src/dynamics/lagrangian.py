"""
Lagrangian Cross-Check
----------------------
For ``L = 1/2 qdot.T qdot - 1/2 q.U q`` the squared mode frequencies solve
``det(U - lambda T) = 0``. They equal the squared symplectic spectrum of the
Legendre-transformed Hessian ``U (+) T^-1``.
"""

from __future__ import annotations

from typing import Any

import numpy as np
import scipy.linalg

from ..errors import DimensionMismatchError
from ..kernel.linalg import as_matrix, inv_sqrt_spd, require_positive_definite


def lagrangian_modes(T: Any, U: Any) -> np.ndarray:
    """Ascending frequencies ``sqrt(eig(T^-1/2 U T^-1/2))``."""
    kinetic = as_matrix(T, "T")
    potential = as_matrix(U, "U")
    if kinetic.shape != potential.shape:
        raise DimensionMismatchError(
            f"T is {kinetic.shape} but U is {potential.shape}"
        )
    require_positive_definite(potential, "U")
    root = inv_sqrt_spd(kinetic)
    reduced = root @ potential @ root
    eig = require_positive_definite(0.5 * (reduced + reduced.T), "T^-1/2 U T^-1/2")
    return np.sqrt(eig.eigenvalues)


def legendre_hessian(T: Any, U: Any) -> np.ndarray:
    """Phase-space Hessian ``U (+) T^-1`` in (q-block, p-block) ordering."""
    kinetic = as_matrix(T, "T")
    potential = as_matrix(U, "U")
    if kinetic.shape != potential.shape:
        raise DimensionMismatchError(
            f"T is {kinetic.shape} but U is {potential.shape}"
        )
    require_positive_definite(kinetic, "T")
    return scipy.linalg.block_diag(potential, np.linalg.inv(kinetic))
