"""
Boxes (0, L_1) x ... x (0, L_d) and their Dirichlet eigenpairs

    mu_n  = pi^2 sum_i n_i^2 / L_i^2
    phi_n = prod_i sqrt(2 / L_i) sin(pi n_i x_i / L_i).
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from fraccauchy.core.errors import DomainError

MAX_DIMENSION = 3


@dataclass(frozen=True)
class BoxDomain:
    lengths: Tuple[float, ...]

    def __post_init__(self):
        lengths = tuple(float(v) for v in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if not 1 <= len(lengths) <= MAX_DIMENSION:
            raise DomainError(f"box dimension must be 1..{MAX_DIMENSION}, got {len(lengths)}")
        if not all(v > 0.0 and math.isfinite(v) for v in lengths):
            raise DomainError(f"box lengths must be positive, got {lengths}")

    @classmethod
    def unit(cls, d: int) -> "BoxDomain":
        return cls(lengths=(1.0,) * d)

    @property
    def d(self) -> int:
        return len(self.lengths)

    @property
    def sup_phi(self) -> float:
        """Largest value of any |phi_n| on the box."""
        return math.prod(math.sqrt(2.0 / v) for v in self.lengths)

    @property
    def volume(self) -> float:
        return math.prod(self.lengths)

    def as_points(self, points) -> np.ndarray:
        """Coerce points to shape (P, d)."""
        pts = np.atleast_1d(np.asarray(points, dtype=float))
        if pts.ndim == 1:
            pts = pts.reshape(-1, self.d) if self.d > 1 else pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[1] != self.d:
            raise DomainError(f"expected points of dimension {self.d}, got shape {np.shape(points)}")
        return pts

    def check_closed(self, points) -> np.ndarray:
        pts = self.as_points(points)
        upper = np.asarray(self.lengths)
        if np.any(pts < 0.0) or np.any(pts > upper):
            raise DomainError(f"points outside the closed box {self.lengths}")
        return pts

    def is_interior(self, point: Sequence[float]) -> bool:
        pts = self.as_points(point)
        return bool(np.all(pts > 0.0) and np.all(pts < np.asarray(self.lengths)))

    def on_boundary(self, points) -> np.ndarray:
        pts = self.as_points(points)
        return np.any((pts == 0.0) | (pts == np.asarray(self.lengths)), axis=1)


@dataclass(frozen=True)
class ModeIndex:
    n: Tuple[int, ...]

    def __post_init__(self):
        n = tuple(int(v) for v in self.n)
        object.__setattr__(self, "n", n)
        if not n or any(v < 1 for v in n):
            raise DomainError(f"mode components must be >= 1, got {n}")


ModeLike = Union[ModeIndex, Sequence[int], int]


def as_mode(dom: BoxDomain, n: ModeLike) -> ModeIndex:
    if isinstance(n, ModeIndex):
        mode = n
    elif isinstance(n, (int, np.integer)):
        mode = ModeIndex((int(n),))
    else:
        mode = ModeIndex(tuple(n))
    if len(mode.n) != dom.d:
        raise DomainError(f"mode {mode.n} does not match box dimension {dom.d}")
    return mode


def eigenvalue(dom: BoxDomain, n: ModeLike) -> float:
    mode = as_mode(dom, n)
    return math.pi ** 2 * sum(k * k / (v * v) for k, v in zip(mode.n, dom.lengths))


def axis_modes(length: float, n_modes: int, x: np.ndarray) -> np.ndarray:
    """
    Matrix of 1D eigenfunctions, shape (len(x), n_modes), column k-1 holds mode k.

    Boundary coordinates give exact zeros.
    """
    x = np.asarray(x, dtype=float)
    k = np.arange(1, n_modes + 1)
    values = math.sqrt(2.0 / length) * np.sin(np.pi * np.outer(x, k) / length)
    values[(x == 0.0) | (x == length)] = 0.0
    return values


def eigenfunction(dom: BoxDomain, n: ModeLike, x) -> Union[float, np.ndarray]:
    """phi_n at one point (returns float) or at an array of points."""
    mode = as_mode(dom, n)
    pts = dom.check_closed(x)
    values = np.ones(pts.shape[0])
    for axis, (k, length) in enumerate(zip(mode.n, dom.lengths)):
        values *= axis_modes(length, k, pts[:, axis])[:, k - 1]
    single = np.ndim(x) == 0 or (np.ndim(x) == 1 and dom.d > 1 and len(x) == dom.d)
    return float(values[0]) if single else values


def eigenvalue_grid(dom: BoxDomain, max_mode: Sequence[int]) -> np.ndarray:
    """Tensor of mu_n for 1 <= n_i <= max_mode[i]."""
    total = np.zeros(tuple(max_mode))
    for axis, (n_max, length) in enumerate(zip(max_mode, dom.lengths)):
        shape = [1] * dom.d
        shape[axis] = n_max
        total = total + (np.pi * np.arange(1, n_max + 1) / length).reshape(shape) ** 2
    return total
