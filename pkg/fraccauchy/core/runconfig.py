"""
Run configuration for the batch CLI.

Config files are flat `key = value` lines; blank lines and lines starting
with `#` are ignored. Command-line flags (--seed, --out, --threads, --set
key=value) override file values. Keys:

    lengths    = 1.0 [, 1.0 [, 1.0]]   box side lengths (d = number of entries)
    modes      = 32 [, 32 [, 32]]      per-axis mode cap (default per dimension)
    tolerance  = 1e-4                  truncation tolerance of series solutions
    initial    = mode 1 | bump [amp] | sum w:n1[,n2,..] ...
    beta       = 0.5                   order in (0, 1]; exclusive with measure
    measure    = path/to/file.measure  order measure file
    times      = 0.1, 0.3              evaluation times
    points     = 0.5 ; 0.25            points, `;` between points, `,` between coordinates
    grid       = 11 [, 11]             points per axis including both ends (if no points)
    x          = 0, -1, -10            Mittag-Leffler arguments (ml)
    lambdas    = 1, 10                 eigenvalues (eigen)
    sampler    = stable | inverse | composite | ctrw   (sample)
    n_samples  = 10000                 draws (sample)
    t          = 1.0                   time of the sampled process (sample)
    c          = 1000                  CTRW time scale (sample, ctrw)
    n_paths, dt, dx, budget, block_size    Monte-Carlo settings (mc)
    seed       = 0                     64-bit master seed
    threads    = 8                     worker threads
    out        = result.csv            output path (stdout if absent)
    suite, checks, scale, fault        validation suite file, selection, sample scale, injected fault

Lists are separated by commas or whitespace.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Literal, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from fraccauchy.core.errors import ConfigError

logger = logging.getLogger(__name__)

Command = Literal["ml", "sample", "eigen", "solve", "mc", "validate"]

_KEY_LINE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$")


def _split(value):
    if isinstance(value, str):
        return [v for v in re.split(r"[,\s]+", value.strip()) if v]
    return value


def _split_points(value):
    if isinstance(value, str):
        points = []
        for chunk in value.split(";"):
            coords = _split(chunk)
            if coords:
                points.append(coords)
        return points
    return value


class RunConfig(BaseModel):
    """Everything one CLI invocation needs; checked before any computation starts."""

    command: Command

    lengths: List[float] = Field(default_factory=lambda: [1.0], min_length=1, max_length=3)
    modes: Optional[List[int]] = None
    tolerance: Optional[float] = Field(None, gt=0.0)
    initial: str = "mode 1"

    beta: Optional[float] = Field(None, gt=0.0, le=1.0)
    measure: Optional[Path] = None

    times: List[float] = Field(default_factory=list)
    points: Optional[List[List[float]]] = None
    grid: Optional[List[int]] = None

    x: List[float] = Field(default_factory=list)
    lambdas: List[float] = Field(default_factory=list)

    sampler: Literal["stable", "inverse", "composite", "ctrw"] = "inverse"
    n_samples: int = Field(10_000, ge=2)
    t: float = Field(1.0, gt=0.0)
    c: float = Field(1000.0, ge=1.0)

    n_paths: int = Field(100_000, ge=100)
    dt: float = Field(1e-4, gt=0.0)
    dx: float = Field(1e-3, gt=0.0)
    budget: int = Field(1_000_000, ge=1)
    block_size: Optional[int] = Field(None, ge=1)

    seed: int = Field(0, ge=0, lt=2 ** 64)
    threads: Optional[int] = Field(None, ge=1)
    out: Optional[Path] = None

    suite: Optional[Path] = None
    checks: List[str] = Field(default_factory=list)
    scale: Optional[float] = Field(None, gt=0.0)
    fault: Optional[str] = None

    model_config = {"frozen": True, "extra": "forbid"}

    @field_validator("lengths", "modes", "grid", "times", "x", "lambdas", "checks", mode="before")
    @classmethod
    def split_lists(cls, v):
        return _split(v)

    @field_validator("points", mode="before")
    @classmethod
    def split_points(cls, v):
        return _split_points(v)

    @field_validator("lengths")
    @classmethod
    def positive_lengths(cls, v):
        if any(not length > 0.0 for length in v):
            raise ValueError("side lengths must be positive")
        return v

    @field_validator("times")
    @classmethod
    def positive_times(cls, v):
        if any(not t > 0.0 for t in v):
            raise ValueError("times must be positive")
        return v

    @field_validator("x")
    @classmethod
    def negative_axis(cls, v):
        if any(not x <= 0.0 for x in v):
            raise ValueError("Mittag-Leffler arguments must be <= 0")
        return v

    @field_validator("lambdas")
    @classmethod
    def positive_lambdas(cls, v):
        if any(not lam > 0.0 for lam in v):
            raise ValueError("eigenvalues must be positive")
        return v

    @model_validator(mode="after")
    def check_command(self) -> "RunConfig":
        d = len(self.lengths)
        for name in ("modes", "grid"):
            value = getattr(self, name)
            if value is not None and len(value) not in (1, d):
                raise ValueError(f"{name} needs 1 or {d} entries, got {len(value)}")
        if self.points is not None and any(len(p) != d for p in self.points):
            raise ValueError(f"every point needs {d} coordinates")
        if self.beta is not None and self.measure is not None:
            raise ValueError("give either beta or measure, not both")

        if self.command == "ml" and self.beta is None:
            raise ValueError("'ml' needs beta")
        if self.command in ("eigen", "solve", "mc") and self.beta is None and self.measure is None:
            raise ValueError(f"'{self.command}' needs beta or measure")
        if self.command == "sample":
            if self.sampler == "composite" and self.measure is None:
                raise ValueError("the composite sampler needs a measure file")
            if self.sampler != "composite" and self.beta is None:
                raise ValueError(f"the {self.sampler} sampler needs beta")
        if self.command == "ml" and not self.x:
            raise ValueError("'ml' needs at least one argument in x")
        if self.command in ("eigen", "solve", "mc") and not self.times:
            raise ValueError(f"'{self.command}' needs a non-empty times list")
        if self.command == "eigen" and not self.lambdas:
            raise ValueError("'eigen' needs at least one eigenvalue in lambdas")

        for name in ("measure", "suite"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                raise ValueError(f"{name} file not found: {path}")
        return self

    @property
    def dim(self) -> int:
        return len(self.lengths)

    def mode_cap(self) -> Optional[Tuple[int, ...]]:
        if self.modes is None:
            return None
        return tuple(self.modes) * self.dim if len(self.modes) == 1 else tuple(self.modes)

    def point_array(self) -> np.ndarray:
        """Explicit points, or a tensor grid including the boundary (11 per axis by default)."""
        if self.points is not None:
            return np.asarray(self.points, dtype=float)
        counts = self.grid or [11]
        counts = counts * self.dim if len(counts) == 1 else counts
        axes = [np.linspace(0.0, length, n) for length, n in zip(self.lengths, counts)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=1)


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    """Raw key/value pairs of a config file."""
    values: Dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _KEY_LINE.match(line)
        if match is None:
            raise ConfigError(f"{source}:{line_no}: expected 'key = value', got {raw!r}")
        key, value = match.group(1), match.group(2).strip()
        if key in values:
            raise ConfigError(f"{source}:{line_no}: duplicate key {key!r}")
        values[key] = value
    return values


def parse_overrides(pairs: List[str]) -> Dict[str, str]:
    """`key=value` strings from --set."""
    values = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"override {pair!r} must look like key=value")
        values[key.strip()] = value.strip()
    return values


def load_run_config(
    command: str,
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, object]] = None,
) -> RunConfig:
    """
    Read a config file (optional), apply overrides, and validate.

    Relative measure/suite paths in a file resolve against the file's directory.

    Raises:
        ConfigError: for unreadable files, unknown keys, or invalid values
    """
    raw: Dict[str, object] = {}
    if path is not None:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}")
        raw.update(parse_config_text(text, str(path)))
        for key in ("measure", "suite"):
            if key in raw and not Path(str(raw[key])).is_absolute():
                raw[key] = str(path.parent / str(raw[key]))
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value
    raw["command"] = command

    try:
        cfg = RunConfig.model_validate(raw)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"invalid run configuration: {problems}")
    logger.debug(f"run config for '{command}': {cfg.model_dump(exclude_defaults=True)}")
    return cfg
