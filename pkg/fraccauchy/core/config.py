"""
Library-wide numerical settings.

Defaults can be overridden through FRACCAUCHY_* environment variables or a
.env file in the working directory.
"""

import os
from dataclasses import dataclass, field
from typing import Dict

import psutil
from dotenv import load_dotenv

load_dotenv()


def _env_float(name: str, default: str) -> float:
    return float(os.environ.get(name, default))


def _env_int(name: str, default: str) -> int:
    return int(os.environ.get(name, default))


def _default_threads() -> int:
    return _env_int("FRACCAUCHY_THREADS", str(psutil.cpu_count(logical=False) or 1))


@dataclass
class AppConfig:
    # Special functions
    ml_rel_tol: float = field(default_factory=lambda: _env_float("FRACCAUCHY_ML_REL_TOL", "1e-12"))
    quad_abs_tol: float = field(default_factory=lambda: _env_float("FRACCAUCHY_QUAD_ABS_TOL", "1e-10"))
    quad_limit: int = field(default_factory=lambda: _env_int("FRACCAUCHY_QUAD_LIMIT", "400"))

    # Spectral truncation
    truncation_tol: float = field(default_factory=lambda: _env_float("FRACCAUCHY_TRUNCATION_TOL", "1e-4"))
    node_margin: int = field(default_factory=lambda: _env_int("FRACCAUCHY_NODE_MARGIN", "16"))
    projection_point_budget: int = field(
        default_factory=lambda: _env_int("FRACCAUCHY_PROJECTION_POINTS", "20000000")
    )
    mode_caps: Dict[int, int] = field(default_factory=lambda: {1: 64, 2: 32, 3: 16})

    # Order measures: ceiling for the quadrature of p(beta)/(1-beta)
    measure_ceiling: float = field(default_factory=lambda: _env_float("FRACCAUCHY_MEASURE_CEILING", "1e4"))

    # Monte Carlo
    block_size: int = field(default_factory=lambda: _env_int("FRACCAUCHY_BLOCK_SIZE", "4096"))
    resource_cap: float = field(default_factory=lambda: _env_float("FRACCAUCHY_RESOURCE_CAP", "1e12"))
    ctrw_budget: int = field(default_factory=lambda: _env_int("FRACCAUCHY_CTRW_BUDGET", "1000000"))
    walk_budget: int = field(default_factory=lambda: _env_int("FRACCAUCHY_WALK_BUDGET", "1000000"))
    threads: int = field(default_factory=_default_threads)

    @classmethod
    def validate(cls) -> "AppConfig":
        cfg = cls()
        if not 0.0 < cfg.ml_rel_tol < 1e-3:
            raise ValueError(f"ml_rel_tol must lie in (0, 1e-3), got {cfg.ml_rel_tol}")
        if cfg.block_size < 1:
            raise ValueError(f"block_size must be positive, got {cfg.block_size}")
        if cfg.threads < 1:
            cfg.threads = 1
        return cfg

    def mode_cap(self, dim: int) -> int:
        """Default per-axis mode cap for a box of dimension dim."""
        return self.mode_caps.get(dim, 16)


_settings = None


def get_settings() -> AppConfig:
    """Process-wide settings, created on first use."""
    global _settings
    if _settings is None:
        _settings = AppConfig.validate()
    return _settings
