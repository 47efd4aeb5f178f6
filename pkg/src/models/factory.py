"""
Factory methods for the reference systems used as fixtures.
"""

from typing import Optional

import numpy as np

from ..dynamics.ions import TrappedIons
from ..symplectic.form import J_matrix, random_symplectic
from .files import CovarianceFile, MatrixFile, ModelFile


class FixtureFactory:
    """Factory for model, covariance and matrix documents of known systems."""

    @staticmethod
    def rotated_oscillator(a: float = 4.0, b: float = 1.0) -> ModelFile:
        """``H = a/4 (q + p)^2 + b/4 (q - p)^2``; one mode of frequency sqrt(ab)."""
        s = 0.5 * (a + b)
        c = 0.5 * (a - b)
        return ModelFile(
            n=1,
            hessian=[[s, c], [c, s]],
            labels=["q'"],
            description=f"rotated oscillator a={a:g} b={b:g}",
        )

    @staticmethod
    def squeezed_modes(
        omega: float = 5.0, gamma: float = 1.0, kappa: float = 3.0
    ) -> ModelFile:
        """Three field modes with one- and two-mode squeezing.

        Hessian ``[[w I, C], [C, w I]]`` with ``gamma`` on the diagonal of C and
        ``-kappa/sqrt(2)`` between neighbours; frequencies
        ``sqrt(w^2 - c^2)`` for c in (gamma, gamma - kappa, gamma + kappa).
        """
        k = kappa / np.sqrt(2.0)
        C = np.array([[gamma, -k, 0.0], [-k, gamma, -k], [0.0, -k, gamma]])
        H = np.block([[omega * np.eye(3), C], [C, omega * np.eye(3)]])
        return ModelFile(
            n=3,
            hessian=H.tolist(),
            labels=["mode1", "mode2", "mode3"],
            description=(
                f"squeezed modes omega={omega:g} gamma={gamma:g} kappa={kappa:g}"
            ),
        )

    @staticmethod
    def trapped_ions(
        m: float = 1.0, varpi: float = 1.0, C: float = 2.0, d: float = 2.0
    ) -> ModelFile:
        ions = TrappedIons(m=m, varpi=varpi, C=C, d=d)
        return ModelFile.from_hamiltonian(
            ions.hamiltonian(),
            labels=["ion1", "ion2"],
            description=f"trapped ions m={m:g} varpi={varpi:g} C={C:g} d={d:g}",
        )

    @staticmethod
    def oscillator(mu: float = 1.0, hbar: float = 1.0) -> ModelFile:
        return ModelFile(n=1, hbar=hbar, hessian=[[mu, 0.0], [0.0, mu]])

    @staticmethod
    def identity(n: int) -> ModelFile:
        return ModelFile(n=n, hessian=np.eye(2 * n).tolist())

    @staticmethod
    def scaled_identity_covariance(
        n: int, factor: float, hbar: float = 1.0, mean: Optional[list] = None
    ) -> CovarianceFile:
        """``factor * hbar * I``; factor 1/2 is the vacuum."""
        return CovarianceFile(
            n=n, hbar=hbar, matrix=(factor * hbar * np.eye(2 * n)).tolist(), mean=mean
        )

    @staticmethod
    def symplectic_form(n: int) -> MatrixFile:
        return MatrixFile(matrix=J_matrix(n).tolist(), description=f"J for n={n}")

    @staticmethod
    def random_symplectic(n: int, seed: int, tau: float = 1.0) -> MatrixFile:
        return MatrixFile(
            matrix=random_symplectic(n, seed, tau).tolist(),
            description=f"random symplectic n={n} seed={seed} tau={tau:g}",
        )
