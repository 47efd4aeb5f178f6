"""
Configuration
-------------
Runtime settings read from the environment (and an optional ``.env`` file),
plus the logging setup shared by the library and the CLI.

Environment variables:
    SYMPLECTICA_TOL              relative verification tolerance (1e-8)
    SYMPLECTICA_POSITIVITY_TOL   relative positivity threshold (1e-12)
    SYMPLECTICA_SYMMETRY_TOL     relative symmetry tolerance (1e-10)
    SYMPLECTICA_MAX_SWEEPS       Jacobi sweep budget (100)
    SYMPLECTICA_LOG_LEVEL        log level for the "symplectica" logger
    ENVFILE                      path of the .env file to load
"""

from __future__ import annotations

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Optional

import colorlog
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

# Repo root is one level up from this file: symplectica/src/config.py
REPO_ROOT = Path(__file__).resolve().parents[1]
ENVFILE = os.environ.get("ENVFILE", str(REPO_ROOT / ".env"))

LOGGER_NAME = "symplectica"
LOG_FORMAT = "%(log_color)s[symplectica | %(levelname)s]%(reset)s %(message)s"

ENV_PREFIX = "SYMPLECTICA_"


class Settings(BaseModel):
    """Numerical tolerances and logging level."""

    model_config = ConfigDict(frozen=True)

    tol: float = Field(1e-8, gt=0, description="Relative verification tolerance")
    positivity_tol: float = Field(
        1e-12, gt=0, description="Positive-definite iff lambda_min > tol * lambda_max"
    )
    symmetry_tol: float = Field(
        1e-10, gt=0, description="Relative symmetry tolerance for eigensolvers"
    )
    max_sweeps: int = Field(100, ge=1, description="Jacobi sweep budget")
    log_level: str = Field("WARNING", description="Level of the symplectica logger")

    @field_validator("log_level")
    @classmethod
    def check_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"unknown log level: {v}")
        return level

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Build settings from ``SYMPLECTICA_*`` variables, defaults elsewhere."""
        env = os.environ if environ is None else environ
        values = {}
        for name in cls.model_fields:
            raw = env.get(ENV_PREFIX + name.upper())
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        return cls(**values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings; the .env file never overrides real variables."""
    load_dotenv(ENVFILE, override=False)
    return Settings.from_env()


# =============================================================
# Logging
# =============================================================


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Attach a single coloured stderr handler to the symplectica logger."""
    logger = logging.getLogger(LOGGER_NAME)
    name = (level or get_settings().log_level).upper()
    logger.setLevel(getattr(logging, name, logging.WARNING))
    if not logger.handlers:
        handler = colorlog.StreamHandler()
        handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT))
        logger.addHandler(handler)
    return logger
