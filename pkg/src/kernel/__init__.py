"""
Numeric kernel: eigensolvers, matrix square roots, exponentials.
"""

from .linalg import (
    PositivityReport,
    SpectralDecomposition,
    as_matrix,
    expm,
    hermitian_eig,
    inv_sqrt_spd,
    is_positive_definite,
    max_norm,
    require_positive_definite,
    sqrt_spd,
    sym_eig,
)

__all__ = [
    "PositivityReport",
    "SpectralDecomposition",
    "as_matrix",
    "expm",
    "hermitian_eig",
    "inv_sqrt_spd",
    "is_positive_definite",
    "max_norm",
    "require_positive_definite",
    "sqrt_spd",
    "sym_eig",
]
