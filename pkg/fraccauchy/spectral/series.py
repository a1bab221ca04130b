"""Evaluation of truncated eigenfunction series: killed semigroup and heat kernel."""

import logging
import string
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import DomainError, TruncationError
from fraccauchy.spectral.coefficients import ModeCap, SpectralCoefficients, resolve_mode_cap
from fraccauchy.spectral.domain import BoxDomain, axis_modes
from fraccauchy.spectral.tails import heat_tail

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesValue:
    value: float
    tail_bound: float


def series_at_points(coeffs: SpectralCoefficients, factors: np.ndarray, points) -> np.ndarray:
    """sum_n coeffs(n) factors(n) phi_n(x) at each point; factors has the coefficient shape."""
    dom = coeffs.domain
    pts = dom.check_closed(points)
    letters = string.ascii_lowercase[: dom.d]
    mats = [axis_modes(L, n, pts[:, i]) for i, (L, n) in enumerate(zip(dom.lengths, coeffs.max_mode))]
    subscripts = ",".join(f"p{c}" for c in letters) + f",{letters}->p"
    return np.einsum(subscripts, *mats, coeffs.coeffs * factors, optimize=True)


def check_tail(tail: float, where: str, tolerance: Optional[float] = None) -> float:
    tolerance = get_settings().truncation_tol if tolerance is None else tolerance
    if not tail <= tolerance:
        raise TruncationError(tail, tolerance, where)
    return tail


def semigroup_tail(coeffs: SpectralCoefficients, t: float) -> float:
    """sup|phi| * (l1 tail of f_bar) * exp(-mu_tail t)."""
    return coeffs.domain.sup_phi * coeffs.tail_l1 * float(np.exp(-coeffs.mu_tail * t))


def semigroup_apply(coeffs: SpectralCoefficients, t: float, x, tolerance: Optional[float] = None) -> SeriesValue:
    """
    T_D(t) f(x) = sum_n exp(-mu_n t) f_bar(n) phi_n(x).

    Raises:
        TruncationError: if the tail bound exceeds the tolerance
    """
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    tail = check_tail(semigroup_tail(coeffs, t), f"semigroup_apply(t={t:g})", tolerance)
    value = series_at_points(coeffs, np.exp(-coeffs.eigenvalues * t), x)
    return SeriesValue(value=float(value[0]), tail_bound=tail)


def heat_kernel(
    dom: BoxDomain, t: float, x, y, n: ModeCap = None, tolerance: Optional[float] = None
) -> SeriesValue:
    """
    Killed heat kernel p_D(t, x, y) = sum_n exp(-mu_n t) phi_n(x) phi_n(y).

    The truncated sum factorises over axes.

    Raises:
        TruncationError: if the tail bound exceeds the tolerance
    """
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    max_mode = resolve_mode_cap(dom, n)
    px = dom.check_closed(x)[0]
    py = dom.check_closed(y)[0]

    tail = check_tail(dom.sup_phi ** 2 * heat_tail(dom, t, max_mode), f"heat_kernel(t={t:g})", tolerance)
    value = 1.0
    for i, (L, n_max) in enumerate(zip(dom.lengths, max_mode)):
        k = np.arange(1, n_max + 1)
        decay = np.exp(-(np.pi * k / L) ** 2 * t)
        value *= float(np.sum(decay * axis_modes(L, n_max, px[i:i + 1])[0] * axis_modes(L, n_max, py[i:i + 1])[0]))
    return SeriesValue(value=value, tail_bound=tail)
