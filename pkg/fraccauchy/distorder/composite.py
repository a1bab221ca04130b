"""
Composite subordinator W(x) = sum_i a_i D_i(x) for an atoms-only measure,
its first-passage inverse E(t) = inf{x > 0 : W(x) > t}, and the Monte-Carlo
density g(t, x) of E(t).

The scales a_i = (w_i Gamma(1 - beta_i))^(1/beta_i) make
E[exp(-s W(x))] = exp(-x psi_W(s)).
"""

import logging
from typing import Optional, Tuple, Union

import numpy as np

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import BudgetExceededError, DomainError
from fraccauchy.distorder.exponents import levy_tail
from fraccauchy.distorder.measure import OrderMeasure, caputo_weights
from fraccauchy.subord import RngStream, StableIndex, sample_stable, summarize
from fraccauchy.subord.rng import Size

logger = logging.getLogger(__name__)


def _require_atoms(m: OrderMeasure) -> None:
    if not m.atoms_only:
        raise DomainError(f"composite subordinator needs an atoms-only measure, got {m.describe()}")


def composite_scales(m: OrderMeasure) -> np.ndarray:
    _require_atoms(m)
    betas = np.array([b for b, _ in m.atoms])
    return caputo_weights(m) ** (1.0 / betas)


def _increments(m: OrderMeasure, scales: np.ndarray, x: float, r: RngStream, size: Size):
    total = 0.0 if size is None else np.zeros(size)
    for (beta, _), a in zip(m.atoms, scales):
        total = total + a * x ** (1.0 / beta) * sample_stable(StableIndex(beta), r, size)
    return total


def sample_composite_subordinator(
    m: OrderMeasure, x: float, r: RngStream, size: Size = None
) -> Union[float, np.ndarray]:
    """Draw W(x)."""
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x}")
    return _increments(m, composite_scales(m), x, r, size)


def sample_inverse_composite(
    m: OrderMeasure,
    t: float,
    r: RngStream,
    dx: float,
    size: Size = None,
    budget: Optional[int] = None,
) -> Union[float, np.ndarray]:
    """
    First-passage walk on the grid x_k = k dx.

    Returns the first grid point where W exceeds t, so the result lies within
    dx above E(t). Paths advance together; finished paths stop drawing.

    Raises:
        BudgetExceededError: if a path needs more than `budget` steps
    """
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    if not dx > 0.0:
        raise DomainError(f"grid step must be positive, got {dx}")
    budget = budget or get_settings().walk_budget
    scales = composite_scales(m)

    n_paths = 1 if size is None else int(np.prod(size))
    level = np.zeros(n_paths)
    steps = np.zeros(n_paths, dtype=np.int64)
    active = np.ones(n_paths, dtype=bool)

    k = 0
    while active.any():
        if k >= budget:
            raise BudgetExceededError(f"inverse composite walk (t={t:g}, dx={dx:g})", budget)
        running = np.flatnonzero(active)
        level[running] += _increments(m, scales, dx, r, running.size)
        k += 1
        steps[running] = k
        active[running[level[running] > t]] = False

    logger.debug(f"inverse composite walk t={t:g} dx={dx:g}: {n_paths} paths, {k} steps")
    passage = steps * dx
    return float(passage[0]) if size is None else passage.reshape(size)


def g_density_mc(m: OrderMeasure, t: float, x: float, n_paths: int, r: RngStream) -> Tuple[float, float]:
    """
    Monte-Carlo density of E(t) at x: E[phi_W(t - W(x), inf); W(x) < t].

    Returns:
        (estimate, standard error)
    """
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    w = sample_composite_subordinator(m, x, r, size=n_paths)
    below = w < t
    contributions = np.zeros(n_paths)
    if below.any():
        contributions[below] = levy_tail(m, t - w[below])
    summary = summarize(contributions)
    return summary.mean, summary.std_error
