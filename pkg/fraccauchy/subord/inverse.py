"""
Inverse stable subordinator E(t) = inf{x > 0 : D(x) > t}.

By the inverse relation and self-similarity E(t) = (t / D(1))^beta in law,
so E(t) is sampled exactly from one stable draw.
"""

import math
from typing import Union

import numpy as np

from fraccauchy.core.errors import DomainError
from fraccauchy.specfun import gamma_fn
from fraccauchy.subord.rng import RngStream, Size
from fraccauchy.subord.stable import StableIndex, sample_stable, stable_density


def _require_time(t: float) -> None:
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")


def inverse_from_stable(idx: StableIndex, t: float, d1):
    """Map D(1) draws to E(t) draws; reusing d1 for several t couples the paths monotonically."""
    _require_time(t)
    if idx.degenerate:
        return t if np.isscalar(d1) else np.full(np.shape(d1), t)
    return (t / d1) ** idx.beta


def sample_inverse(idx: StableIndex, t: float, r: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """Draw E(t); beta = 1 returns t."""
    _require_time(t)
    if idx.degenerate:
        return t if size is None else np.full(size, t)
    return inverse_from_stable(idx, t, sample_stable(idx, r, size))


def inverse_density(idx: StableIndex, t: float, l: float) -> float:
    """f_E(t)(l) = (t / beta) f_D(1)(t l^(-1/beta)) l^(-1 - 1/beta)."""
    _require_time(t)
    if not l > 0.0:
        raise DomainError(f"inverse density is supported on l > 0, got {l}")
    beta = idx.beta
    return t / beta * stable_density(idx, t * l ** (-1.0 / beta)) * l ** (-1.0 - 1.0 / beta)


def inverse_moment(idx: StableIndex, t: float, k: int = 1) -> float:
    """E[E(t)^k] = k! t^(k beta) / Gamma(1 + k beta)."""
    _require_time(t)
    if k < 0:
        raise DomainError(f"moment order must be nonnegative, got {k}")
    return math.factorial(k) * t ** (k * idx.beta) / gamma_fn(1.0 + k * idx.beta)
