"""
Caputo residual checks of assembled solutions.

The time operator is applied by the L1 scheme and the Laplacian spectrally,
so the residual of a correct solution shrinks at the L1 rate. For a single
order the terms (-lam)^k t^(k beta) / Gamma(1 + k beta) with k beta < 1 are
differentiated exactly and removed before L1 is applied: on their own they
cap the L1 rate at dt^(1 + beta).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import DomainError
from fraccauchy.distorder import OrderMeasure, h_eigen, validate_measure
from fraccauchy.solver.caputo import caputo_l1, uniform_grid
from fraccauchy.solver.series import OrderSpec
from fraccauchy.spectral import SpectralCoefficients, eigenfunction
from fraccauchy.specfun import gamma_fn, mittag_leffler_array

logger = logging.getLogger(__name__)

RESIDUAL_T_MIN = 0.1


@dataclass(frozen=True)
class ResidualResult:
    max_residual: float
    dt: float
    t_min: float
    t_max: float


def _singular_part(beta: float, lam: float, t: np.ndarray):
    """Leading series terms with exponent k beta < 1 and their exact Caputo derivative."""
    part = np.zeros_like(t)
    derivative = np.zeros_like(t)
    k = 0
    while k * beta < 1.0:
        coeff = (-lam) ** k
        part += coeff * t ** (k * beta) / gamma_fn(1.0 + k * beta)
        if k >= 1:
            derivative += coeff * t ** ((k - 1) * beta) / gamma_fn(1.0 + (k - 1) * beta)
        k += 1
    return part, derivative


def ml_profile_caputo(beta: float, lam: float, t: np.ndarray, subtract_singular: bool = True):
    """
    Samples of G(t) = M_beta(-lam t^beta) on a uniform grid and the L1
    approximation of its Caputo derivative.

    Returns:
        (G samples, Caputo derivative samples)
    """
    dt = float(t[1] - t[0])
    g = mittag_leffler_array(beta, -lam * t ** beta, get_settings().ml_rel_tol)
    if not subtract_singular:
        return g, caputo_l1(g, beta, dt)
    part, exact = _singular_part(beta, lam, t)
    return g, caputo_l1(g - part, beta, dt) + exact


def eigen_residual(
    beta: float,
    lam: float,
    dt: float,
    t_min: float = RESIDUAL_T_MIN,
    t_max: float = 1.0,
    subtract_singular: bool = True,
) -> float:
    """max over t_min <= t_k <= t_max of |D^beta G + lam G| for G = M_beta(-lam t^beta)."""
    if not 0.0 < beta < 1.0:
        raise DomainError(f"eigen_residual order must lie in (0, 1), got {beta}")
    t = uniform_grid(dt, t_max)
    g, dg = ml_profile_caputo(beta, lam, t, subtract_singular)
    mask = t >= t_min - 1e-12
    return float(np.max(np.abs(dg[mask] + lam * g[mask])))


def _time_residual(order: OrderSpec, lam: float, t: np.ndarray) -> np.ndarray:
    """(time operator) G + lam G on the grid, for the eigenvalue solution G."""
    if isinstance(order, OrderMeasure):
        dt = float(t[1] - t[0])
        g = np.ones_like(t)
        for k in range(1, t.size):
            g[k] = h_eigen(order, float(t[k]), lam, validate=False).value
        betas, masses = order.point_masses
        operator = np.zeros_like(t)
        for beta, mass in zip(betas, masses):
            operator += mass * gamma_fn(1.0 - beta) * caputo_l1(g, beta, dt)
        return operator + lam * g

    beta = float(order)
    if beta == 1.0:
        # backward difference, the beta -> 1 limit of L1
        g = np.exp(-lam * t)
        dg = np.zeros_like(t)
        dg[1:] = np.diff(g) / float(t[1] - t[0])
        return dg + lam * g
    g, dg = ml_profile_caputo(beta, lam, t)
    return dg + lam * g


def residual_check(
    coeffs: SpectralCoefficients,
    order: OrderSpec,
    t_grid: np.ndarray,
    points,
    t_min: float = RESIDUAL_T_MIN,
) -> ResidualResult:
    """
    Max |time operator u - Laplacian u| over t_grid nodes with t >= t_min and the given points.

    t_grid must be uniform and start at 0.
    """
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 3 or t[0] != 0.0:
        raise DomainError("residual grid must be a uniform 1D grid starting at 0")
    dt = float(t[1] - t[0])
    if not np.allclose(np.diff(t), dt, rtol=1e-9, atol=0.0):
        raise DomainError("residual grid must be uniform")
    if isinstance(order, OrderMeasure):
        validate_measure(order)

    dom = coeffs.domain
    pts = dom.check_closed(points)
    keep = np.flatnonzero(t >= t_min - 1e-12)
    if keep.size == 0:
        raise DomainError(f"residual grid has no nodes at or after t_min={t_min}")

    active = [tuple(int(v) for v in index) for index in np.argwhere(coeffs.coeffs != 0.0)]
    per_eigenvalue = {}
    for index in active:
        lam = float(coeffs.eigenvalues[index])
        if lam not in per_eigenvalue:
            per_eigenvalue[lam] = _time_residual(order, lam, t)[keep]

    # residual(t, x) = sum_n f_bar(n) r_n(t) phi_n(x)
    weighted = np.column_stack(
        [coeffs.coeffs[index] * per_eigenvalue[float(coeffs.eigenvalues[index])] for index in active]
    ) if active else np.zeros((keep.size, 0))
    phi = np.array([
        np.atleast_1d(eigenfunction(dom, tuple(i + 1 for i in index), pts)) for index in active
    ]).reshape(len(active), pts.shape[0])
    worst = float(np.max(np.abs(weighted @ phi))) if active else 0.0

    logger.debug(f"residual dt={dt:g}: {len(per_eigenvalue)} distinct eigenvalues, max={worst:.3e}")
    return ResidualResult(max_residual=worst, dt=dt, t_min=t_min, t_max=float(t[-1]))


def convergence_rate(coarse: float, fine: float) -> float:
    """Observed order log2(coarse / fine) for one halving of the step."""
    if fine <= 0.0:
        return math.inf
    return math.log2(coarse / fine)
