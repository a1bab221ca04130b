"""
Mittag-Leffler function M_beta(x) on the negative real axis.

Two regimes:
- power series sum_n x^n / Gamma(1 + beta n) for |x| up to a per-beta
  switchover, where cancellation between alternating terms is still bounded;
- the Laplace-inversion integral (see kernels.py) beyond it.

M_1 is exp(x) exactly and never reaches either regime.
"""

import logging
import math
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

import numpy as np
from scipy import special

from fraccauchy.core.errors import ConvergenceError, DomainError, QuadratureError
from fraccauchy.specfun.gamma import gamma_fn
from fraccauchy.specfun.kernels import laplace_inversion_integral

logger = logging.getLogger(__name__)

MAX_SERIES_TERMS = 10_000
DEFAULT_SWITCHOVER = 5.0
# Largest admissible ratio of the biggest series term to the result
MAX_TERM_RATIO = 1e12
_EPS = np.finfo(float).eps
# Terms beyond exp(700) cannot cancel to a result in (0, 1]
_LOG_MAX_TERM = 700.0

# Multiplies every switchover; only changed by switchover_fault()
_switch_scale = 1.0
_fault_active = False


@dataclass(frozen=True)
class MLQuery:
    """One evaluation request for M_beta(x)."""
    beta: float
    x: float
    rel_tol: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.beta <= 1.0:
            raise DomainError(f"Mittag-Leffler order must lie in (0, 1], got {self.beta}")
        if not self.x <= 0.0:
            raise DomainError(f"only the negative real axis is supported, got x={self.x}")
        if not 0.0 < self.rel_tol < 1e-3:
            raise DomainError(f"rel_tol must lie in (0, 1e-3), got {self.rel_tol}")


def ml_series(beta: float, x: float, rel_tol: float) -> Tuple[float, float]:
    """
    Power-series evaluation.

    Terms are summed until the next term is below rel_tol/2 of the partial sum
    and terms are decreasing, so the first omitted term bounds the truncation
    error. The returned error adds the rounding error from the largest term.

    Returns:
        (value, error estimate)
    """
    if x == 0.0:
        return 1.0, 0.0

    log_abs = math.log(-x)
    total = 0.0
    max_mag = 0.0
    mag = 1.0
    for n in range(MAX_SERIES_TERMS):
        log_mag = n * log_abs - special.gammaln(1.0 + beta * n)
        log_next = (n + 1) * log_abs - special.gammaln(1.0 + beta * (n + 1))
        if max(log_mag, log_next) > _LOG_MAX_TERM:
            raise ConvergenceError(
                f"Mittag-Leffler series terms overflow for beta={beta}, x={x}",
                achieved=math.inf,
                requested=rel_tol,
            )
        mag = math.exp(log_mag)
        total += mag if n % 2 == 0 else -mag
        max_mag = max(max_mag, mag)

        next_mag = math.exp(log_next)
        if next_mag < mag and next_mag <= 0.5 * rel_tol * abs(total):
            return total, next_mag + 4.0 * _EPS * max_mag

    raise ConvergenceError(
        f"Mittag-Leffler series for beta={beta}, x={x} did not converge in {MAX_SERIES_TERMS} terms",
        achieved=mag / max(abs(total), 1e-300),
        requested=rel_tol,
    )


def ml_integral(beta: float, x: float, rel_tol: float) -> Tuple[float, float]:
    """
    Integral-representation evaluation for beta in (0, 1).

    M_beta(-lam) = (lam/pi) int_0^inf r^-1 e^-r r^b sin(pi b) / ((lam + r^b cos(pi b))^2 + (r^b sin(pi b))^2) dr

    Returns:
        (value, error estimate)

    Raises:
        ConvergenceError: with the achieved relative error if quadrature misses rel_tol
    """
    lam = -x
    sin_b = math.sin(math.pi * beta)
    cos_b = math.cos(math.pi * beta)
    try:
        return laplace_inversion_integral(
            t=1.0,
            lam=lam,
            sin_part=lambda r: sin_b * np.power(r, beta),
            cos_part=lambda r: cos_b * np.power(r, beta),
            min_exponent=beta,
            scale=sin_b,
            rel_tol=rel_tol,
        )
    except QuadratureError as e:
        # the kernel allows rel_tol * |value|, so achieved / requested is the excess factor
        relative = rel_tol * e.achieved / e.requested if e.requested > 0.0 else math.inf
        raise ConvergenceError(
            f"Mittag-Leffler integral for beta={beta}, x={x} missed its tolerance",
            achieved=relative,
            requested=rel_tol,
        ) from e


@lru_cache(maxsize=512)
def switchover(beta: float, rel_tol: float) -> float:
    """
    Largest |x| for which the series stays accurate.

    Scans |x| upward and stops once the largest series term exceeds
    min(1e12, 0.1 rel_tol / eps) times a lower bound of the result,
    1 / (1 + Gamma(1 - beta) |x|).
    """
    if beta >= 1.0:
        return math.inf

    ratio_cap = min(MAX_TERM_RATIO, 0.1 * rel_tol / _EPS)
    orders = np.arange(0, MAX_SERIES_TERMS)
    log_gammas = special.gammaln(1.0 + beta * orders)
    gamma_comp = gamma_fn(1.0 - beta)

    best = 0.0
    for y in np.linspace(0.05, 60.0, 1200):
        log_max_term = float(np.max(orders * math.log(y) - log_gammas))
        log_result = -math.log1p(gamma_comp * y)
        if log_max_term - log_result > math.log(ratio_cap):
            break
        best = float(y)

    if best <= 0.0:
        logger.warning(f"switchover scan found no safe range for beta={beta}; using {DEFAULT_SWITCHOVER}")
        return DEFAULT_SWITCHOVER
    logger.debug(f"Mittag-Leffler switchover beta={beta} rel_tol={rel_tol:g}: |x|={best:.3f}")
    return best


@contextmanager
def switchover_fault(factor: float = 20.0) -> Iterator[None]:
    """
    Test hook: push the series regime `factor` times past its safe range and
    accept its results there without checking the rounding estimate.

    Used to check that the validation suite notices a broken evaluator.
    """
    global _switch_scale, _fault_active
    previous = (_switch_scale, _fault_active)
    _switch_scale, _fault_active = factor, True
    try:
        yield
    finally:
        _switch_scale, _fault_active = previous


def mittag_leffler(q: MLQuery) -> float:
    """
    M_beta(x) for x <= 0 with relative error <= q.rel_tol.

    Raises:
        ConvergenceError: if neither regime reaches the tolerance
    """
    if q.x == 0.0:
        return 1.0
    if q.beta == 1.0:
        return math.exp(q.x)

    use_series = -q.x <= switchover(q.beta, q.rel_tol) * _switch_scale
    if use_series and _fault_active:
        return ml_series(q.beta, q.x, q.rel_tol)[0]
    regimes = (ml_series, ml_integral) if use_series else (ml_integral, ml_series)

    best_error = math.inf
    for evaluate in regimes:
        try:
            value, error = evaluate(q.beta, q.x, q.rel_tol)
        except ConvergenceError as e:
            best_error = min(best_error, e.achieved)
            continue
        relative = error / abs(value) if value != 0.0 else math.inf
        if relative <= q.rel_tol:
            return value
        best_error = min(best_error, relative)
        logger.debug(f"{evaluate.__name__} missed tolerance for beta={q.beta}, x={q.x}: {relative:.2e}")

    raise ConvergenceError(
        f"Mittag-Leffler evaluation failed for beta={q.beta}, x={q.x}",
        achieved=best_error,
        requested=q.rel_tol,
    )


def mittag_leffler_array(beta: float, xs: np.ndarray, rel_tol: float = 1e-12) -> np.ndarray:
    """Evaluate M_beta elementwise; repeated arguments are computed once."""
    xs = np.asarray(xs, dtype=float)
    if beta == 1.0:
        return np.exp(xs)
    unique, inverse = np.unique(xs, return_inverse=True)
    values = np.array([mittag_leffler(MLQuery(beta, float(x), rel_tol)) for x in unique])
    return values[inverse].reshape(xs.shape)


@lru_cache(maxsize=128)
def ml_tail_constant(beta: float) -> float:
    """
    Constant c with |M_beta(-y)| <= min(1, c / y) for y > 0.

    Starts from 1.2 / Gamma(1 - beta) (the asymptotic constant plus 20%) and
    checks it on a log grid; if the grid shows a violation the constant is
    raised to 1.2 times the largest observed y * M_beta(-y).
    """
    if beta >= 1.0:
        # y exp(-y) <= 1/e
        return 1.0 / math.e

    c = 1.2 / gamma_fn(1.0 - beta)
    grid = np.logspace(-2, 6, 80)
    products = grid * mittag_leffler_array(beta, -grid, rel_tol=1e-10)
    observed = float(np.max(products))
    if observed > c:
        logger.warning(
            f"asymptotic tail constant {c:.4f} violated for beta={beta} "
            f"(max y*M={observed:.4f}); using {1.2 * observed:.4f}"
        )
        c = 1.2 * observed
    return c
