"""
Positive beta-stable law D(1) with E[exp(-s D(1))] = exp(-s^beta).

Sampling uses Kanter's representation

    D = (A(U) / W)^((1 - beta) / beta),
    A(u) = [sin(beta u) / sin u]^(1 / (1 - beta)) * sin((1 - beta) u) / sin(beta u),

with U uniform on (0, pi) and W standard exponential. Integrating W out of
the same representation gives the distribution function and density used
below.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy import integrate

from fraccauchy.core.errors import DomainError, QuadratureError
from fraccauchy.subord.rng import RngStream, Size

logger = logging.getLogger(__name__)

_DENSITY_REL_TOL = 1e-10
_PEAK_SCAN_POINTS = 256


@dataclass(frozen=True)
class StableIndex:
    """Index beta of a stable subordinator; beta = 1 is the deterministic clock D(t) = t."""
    beta: float

    def __post_init__(self):
        if not 0.0 < self.beta <= 1.0:
            raise DomainError(f"stable index must lie in (0, 1], got {self.beta}")

    @property
    def degenerate(self) -> bool:
        return self.beta == 1.0


def kanter_log_a(beta: float, u: np.ndarray) -> np.ndarray:
    """log A(u) for u in (0, pi)."""
    log_sin_bu = np.log(np.sin(beta * u))
    return (
        (log_sin_bu - np.log(np.sin(u))) / (1.0 - beta)
        + np.log(np.sin((1.0 - beta) * u))
        - log_sin_bu
    )


def sample_stable(idx: StableIndex, r: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """Draw D(1); returns a float when size is None."""
    if idx.degenerate:
        return 1.0 if size is None else np.ones(size)

    beta = idx.beta
    u = math.pi * r.uniform_open(size)
    w = r.exponential(size)
    draws = np.exp((1.0 - beta) / beta * (kanter_log_a(beta, u) - np.log(w)))
    return float(draws) if size is None else draws


def sample_stable_at(idx: StableIndex, t: float, r: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """Draw D(t) = t^(1/beta) D(1)."""
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    return t ** (1.0 / idx.beta) * sample_stable(idx, r, size)


def _require_density_domain(idx: StableIndex, x: float) -> None:
    if idx.degenerate:
        raise DomainError("the degenerate subordinator (beta = 1) has no density")
    if not x > 0.0:
        raise DomainError(f"stable density is supported on x > 0, got {x}")


def _kanter_quad(integrand, beta: float, z: float) -> float:
    """Integrate integrand(u) over (0, pi), splitting at the peak of A(u) z."""
    grid = np.linspace(0.0, math.pi, _PEAK_SCAN_POINTS + 2)[1:-1]
    peak = float(grid[np.argmax(integrand(grid))])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, error = integrate.quad(
            integrand, 0.0, math.pi, points=[peak], epsabs=0.0, epsrel=_DENSITY_REL_TOL, limit=400
        )
    if error > 1e-8 * max(abs(value), 1e-300) and error > 1e-14:
        raise QuadratureError(f"stable-law quadrature at beta={beta}", error, 1e-8 * abs(value))
    return value


def stable_cdf(idx: StableIndex, x: float) -> float:
    """P(D(1) <= x)."""
    _require_density_domain(idx, x)
    beta = idx.beta
    alpha = beta / (1.0 - beta)
    z = x ** (-alpha)

    def integrand(u):
        return np.exp(-np.exp(kanter_log_a(beta, u)) * z)

    return min(1.0, _kanter_quad(integrand, beta, z) / math.pi)


def stable_density(idx: StableIndex, x: float) -> float:
    """
    Density of D(1).

    beta = 1/2 uses (4 pi)^(-1/2) x^(-3/2) exp(-1/(4x)); other orders integrate
    the derivative of the Kanter distribution function.
    """
    _require_density_domain(idx, x)
    beta = idx.beta
    if beta == 0.5:
        return math.exp(-0.25 / x) / math.sqrt(4.0 * math.pi * x ** 3)

    alpha = beta / (1.0 - beta)
    z = x ** (-alpha)

    def integrand(u):
        a = np.exp(kanter_log_a(beta, u))
        return a * z * np.exp(-a * z)

    return alpha / (math.pi * x) * _kanter_quad(integrand, beta, z)
