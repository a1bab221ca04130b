"""
Laplace-inversion quadrature kernel.

Evaluates

    h(t, lam) = (lam / pi) * int_0^inf r^-1 exp(-t r) S(r) / ((lam + C(r))^2 + S(r)^2) dr

where S and C are the sine- and cosine-weighted sums of r^beta over an order
measure. With a single unit atom and t = 1 this is the spectral
representation of M_beta(-lam); with a general measure it is the eigenvalue
solution of the distributed-order problem. The integral is taken in
u = log r, which removes the r^(beta-1) endpoint singularity.
"""

import logging
import math
import warnings
from typing import Callable, List, Tuple

import numpy as np
from scipy import integrate

from fraccauchy.core.errors import QuadratureError

logger = logging.getLogger(__name__)

ArrayFn = Callable[[np.ndarray], np.ndarray]

# exp(-700) underflows to ~1e-304
_UNDERFLOW_EXPONENT = 700.0
_ROOT_SCAN_POINTS = 400


def _integration_window(
    t: float,
    lam: float,
    min_exponent: float,
    scale: float,
    abs_tol: float,
    rel_tol: float,
) -> Tuple[float, float]:
    """Return (u_lo, u_hi) outside of which the integrand is negligible."""
    u_hi = math.log(_UNDERFLOW_EXPONENT / t)
    # Below u_lo the integrand is bounded by scale * exp(min_exponent u) / lam^2;
    # its integral times lam/pi must stay under the tolerance.
    # The integral itself is at least of order 1/(1 + lam).
    target = max(abs_tol, rel_tol * 1e-3 / (1.0 + lam)) * lam * min_exponent * math.pi / max(scale, 1e-300)
    u_lo = math.log(max(target, 1e-300)) / min_exponent - 2.0
    return min(u_lo, u_hi - 1.0), u_hi


def _breakpoints(lam: float, cos_part: ArrayFn, u_lo: float, u_hi: float) -> List[float]:
    """Locations where lam + C(r) changes sign; the integrand peaks there."""
    grid = np.linspace(u_lo, u_hi, _ROOT_SCAN_POINTS)
    shifted = lam + cos_part(np.exp(grid))
    flips = np.flatnonzero(np.sign(shifted[:-1]) != np.sign(shifted[1:]))
    return [float(0.5 * (grid[i] + grid[i + 1])) for i in flips]


def laplace_inversion_integral(
    t: float,
    lam: float,
    sin_part: ArrayFn,
    cos_part: ArrayFn,
    min_exponent: float,
    scale: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    limit: int = 400,
) -> Tuple[float, float]:
    """
    Evaluate the inversion integral by adaptive quadrature.

    Args:
        t: Time, > 0
        lam: Eigenvalue, > 0
        sin_part: r -> S(r), vectorized
        cos_part: r -> C(r), vectorized
        min_exponent: Smallest order present in S (controls decay at r -> 0)
        scale: Total sine weight, used to size the integration window
        rel_tol: Requested relative accuracy
        abs_tol: Requested absolute accuracy
        limit: Subinterval limit passed to quad

    Returns:
        (value, error estimate)

    Raises:
        QuadratureError: if the error estimate misses max(abs_tol, rel_tol*|value|)
    """
    u_lo, u_hi = _integration_window(t, lam, min_exponent, scale, abs_tol, rel_tol)
    cut_set = {u_lo, u_hi, *_breakpoints(lam, cos_part, u_lo, u_hi)}
    if u_lo < 0.0 < u_hi:
        cut_set.add(0.0)
    cuts = sorted(cut_set)
    piece_abs = abs_tol * math.pi / lam / (len(cuts) - 1)

    def integrand(u: float) -> float:
        r = math.exp(u)
        s = float(sin_part(np.asarray(r)))
        c = float(cos_part(np.asarray(r)))
        return math.exp(-t * r) * s / ((lam + c) ** 2 + s ** 2)

    total = 0.0
    error = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for a, b in zip(cuts[:-1], cuts[1:]):
            piece, piece_err = integrate.quad(
                integrand, a, b, epsabs=piece_abs, epsrel=max(0.5 * rel_tol, 1e-13), limit=limit
            )
            total += piece
            error += piece_err

    value = lam / math.pi * total
    est_error = lam / math.pi * error
    logger.debug(f"inversion integral t={t:g} lam={lam:g}: value={value:.6e} err={est_error:.2e}")

    allowed = max(abs_tol, rel_tol * abs(value))
    if not est_error <= allowed:
        raise QuadratureError("Laplace-inversion quadrature did not converge", est_error, allowed)
    return value, est_error
