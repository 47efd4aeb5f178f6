"""
Symplectic form, predicates and the Williamson decomposition.
"""

from .form import (
    J_matrix,
    SymplecticCheck,
    SymplecticForm,
    half_dimension,
    is_symplectic,
    random_symplectic,
    require_symplectic,
    standard_form,
    symplectic_congruence,
)
from .williamson import WilliamsonResult, symplectic_spectrum, williamson

__all__ = [
    "J_matrix",
    "SymplecticCheck",
    "SymplecticForm",
    "WilliamsonResult",
    "half_dimension",
    "is_symplectic",
    "random_symplectic",
    "require_symplectic",
    "standard_form",
    "symplectic_congruence",
    "symplectic_spectrum",
    "williamson",
]
