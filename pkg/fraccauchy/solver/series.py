"""
Spectral solutions

    heat:        u = sum f_bar(n) exp(-mu_n t) phi_n
    fractional:  u = sum f_bar(n) M_beta(-mu_n t^beta) phi_n
    distributed: u = sum f_bar(n) h(t, mu_n) phi_n

The heat equation is the fractional one at beta = 1, where M_1 = exp.
"""

import logging
import math
from typing import Optional, Union

import numpy as np

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import DomainError
from fraccauchy.distorder import OrderMeasure, h_eigen, h_eigen_values, validate_measure
from fraccauchy.solver.field import FieldSample
from fraccauchy.spectral import SpectralCoefficients, check_tail, series_at_points
from fraccauchy.specfun import mittag_leffler_array, ml_tail_constant

logger = logging.getLogger(__name__)

OrderSpec = Union[float, OrderMeasure]


def _require_time(t: float) -> None:
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")


def ml_decay_bound(beta: float, y: float) -> float:
    """Upper bound on |M_beta(-z)| for every z >= y."""
    if beta == 1.0:
        return math.exp(-y)
    return min(1.0, ml_tail_constant(beta) / y)


def solve_fractional(
    coeffs: SpectralCoefficients, beta: float, t: float, points, tolerance: Optional[float] = None
) -> FieldSample:
    """
    Raises:
        TruncationError: if the series tail bound exceeds the tolerance
    """
    _require_time(t)
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"order must lie in (0, 1], got {beta}")
    dom = coeffs.domain
    pts = dom.check_closed(points)

    tail = dom.sup_phi * coeffs.tail_l1 * ml_decay_bound(beta, coeffs.mu_tail * t ** beta)
    check_tail(tail, f"solve_fractional(beta={beta:g}, t={t:g})", tolerance)

    rel_tol = get_settings().ml_rel_tol
    factors = mittag_leffler_array(beta, -coeffs.eigenvalues * t ** beta, rel_tol)
    values = series_at_points(coeffs, factors, pts)
    # relative Mittag-Leffler error carried through the resolved series
    tail += rel_tol * coeffs.amplitude_bound()
    logger.debug(f"fractional series beta={beta:g} t={t:g}: {pts.shape[0]} points, tail={tail:.3e}")
    return FieldSample(t=t, points=pts, values=values, tail_bound=tail)


def solve_heat(coeffs: SpectralCoefficients, t: float, points, tolerance: Optional[float] = None) -> FieldSample:
    return solve_fractional(coeffs, 1.0, t, points, tolerance)


def solve_distributed(
    coeffs: SpectralCoefficients, m: OrderMeasure, t: float, points, tolerance: Optional[float] = None
) -> FieldSample:
    """
    Raises:
        MeasureValidationError: if m is not admissible
        TruncationError: if the series tail bound exceeds the tolerance
        QuadratureError: if an eigenvalue solution misses its error contract
    """
    _require_time(t)
    validate_measure(m)
    dom = coeffs.domain
    pts = dom.check_closed(points)

    # h(t, .) is decreasing, so the first truncated eigenvalue dominates the tail
    tail = dom.sup_phi * coeffs.tail_l1
    if tail > 0.0:
        tail *= h_eigen(m, t, coeffs.mu_tail, validate=False).value
    check_tail(tail, f"solve_distributed(t={t:g})", tolerance)

    active = coeffs.coeffs != 0.0
    factors = np.zeros(coeffs.max_mode)
    errors = np.zeros(coeffs.max_mode)
    if active.any():
        factors[active], errors[active] = h_eigen_values(m, t, coeffs.eigenvalues[active])
    values = series_at_points(coeffs, factors, pts)
    tail += dom.sup_phi * float(np.sum(np.abs(coeffs.coeffs) * errors))
    logger.debug(f"distributed series t={t:g}: {int(active.sum())} active modes, tail={tail:.3e}")
    return FieldSample(t=t, points=pts, values=values, tail_bound=tail)


def solve(coeffs: SpectralCoefficients, order: OrderSpec, t: float, points, tolerance: Optional[float] = None) -> FieldSample:
    """Dispatch on the order: 1 (heat), beta in (0, 1), or an order measure."""
    if isinstance(order, OrderMeasure):
        return solve_distributed(coeffs, order, t, points, tolerance)
    if float(order) == 1.0:
        return solve_heat(coeffs, t, points, tolerance)
    return solve_fractional(coeffs, float(order), t, points, tolerance)


def describe_order(order: OrderSpec) -> str:
    return order.describe() if isinstance(order, OrderMeasure) else f"beta={float(order):g}"

