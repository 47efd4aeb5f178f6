"""
Models package for symplectica.

JSON document schemas read and written by the CLI, and factories for the
reference systems used as fixtures.
"""

from .factory import FixtureFactory
from .files import CovarianceFile, MatrixFile, ModelFile, dumps

__all__ = [
    "CovarianceFile",
    "FixtureFactory",
    "MatrixFile",
    "ModelFile",
    "dumps",
]
