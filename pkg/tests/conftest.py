"""
Shared fixtures for the symplectica test-suite.
"""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add the repo root to path so ``src`` imports resolve
REPO_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(REPO_ROOT))

from src.config import get_settings
from src.models.factory import FixtureFactory

FIXTURES = Path(__file__).parent / "fixtures"
GOLDENS = Path(__file__).parent / "golden"

SETTING_VARS = ("TOL", "POSITIVITY_TOL", "SYMMETRY_TOL", "MAX_SWEEPS", "LOG_LEVEL")


@pytest.fixture(scope="session", autouse=True)
def isolated_environment():
    """Run the whole session without SYMPLECTICA_* variables from the outer shell."""
    saved = {}
    for name in SETTING_VARS:
        key = f"SYMPLECTICA_{name}"
        if key in os.environ:
            saved[key] = os.environ.pop(key)
    get_settings.cache_clear()
    yield
    os.environ.update(saved)
    get_settings.cache_clear()


@pytest.fixture
def settings_env(monkeypatch):
    """monkeypatch for SYMPLECTICA_* variables; settings are re-read on both ends."""
    get_settings.cache_clear()
    yield monkeypatch
    monkeypatch.undo()
    get_settings.cache_clear()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rotated_hessian() -> np.ndarray:
    """``a/4 (q+p)^2 + b/4 (q-p)^2`` with a=4, b=1."""
    return np.array([[2.5, 1.5], [1.5, 2.5]])


@pytest.fixture
def squeezed_hessian() -> np.ndarray:
    return np.array(FixtureFactory.squeezed_modes(5.0, 1.0, 3.0).hessian)
