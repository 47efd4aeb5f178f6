"""
Error Types
-----------
Typed exceptions raised across the toolkit. Every error carries a snake_case
``code`` (mirrored in CLI messages) and an optional ``details`` mapping.
"""

from __future__ import annotations

from typing import Any, Dict, Optional


class SymplecticaError(Exception):
    """Base class for all toolkit errors."""

    code: str = "symplectica_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, **self.details}


# =============================================================
# Shape and structure
# =============================================================


class InvalidMatrixError(SymplecticaError, ValueError):
    code = "invalid_matrix"


class NonSquareError(InvalidMatrixError):
    code = "non_square"


class NonSymmetricError(InvalidMatrixError):
    code = "non_symmetric"


class NonHermitianError(InvalidMatrixError):
    code = "non_hermitian"


class OddDimensionError(InvalidMatrixError):
    code = "odd_dimension"


class DimensionMismatchError(SymplecticaError, ValueError):
    code = "dimension_mismatch"


class InvalidParameterError(SymplecticaError, ValueError):
    code = "invalid_parameter"


# =============================================================
# Spectral conditions
# =============================================================


class NotPositiveDefiniteError(SymplecticaError, ValueError):
    """Raised when a matrix required to be positive-definite is not.

    The smallest eigenvalue found is kept on ``min_eigenvalue``.
    """

    code = "not_positive_definite"

    def __init__(self, message: str, min_eigenvalue: float) -> None:
        super().__init__(message, {"min_eigenvalue": float(min_eigenvalue)})
        self.min_eigenvalue = float(min_eigenvalue)


class NotSymplecticError(SymplecticaError, ValueError):
    code = "not_symplectic"

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message, {"residual": float(residual)})
        self.residual = float(residual)


class SingularHessianError(SymplecticaError, ValueError):
    code = "singular_hessian"


class SingularCovarianceError(SymplecticaError, ValueError):
    code = "singular_covariance"


class VerificationFailedError(SymplecticaError, ArithmeticError):
    code = "verification_failed"


# =============================================================
# Iterative methods
# =============================================================


class NonConvergentError(SymplecticaError, ArithmeticError):
    code = "non_convergent"


class NoConvergenceError(SymplecticaError, ArithmeticError):
    code = "no_convergence"


class SingularJacobianError(SymplecticaError, ArithmeticError):
    code = "singular_jacobian"
