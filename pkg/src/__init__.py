"""
symplectica
-----------
Williamson symplectic diagonalization and its applications: normal modes of
quadratic Hamiltonians, exact phase-space propagators, Gaussian-state
thermodynamics and uncertainty-relation checks.
"""

__version__ = "0.1.0"
