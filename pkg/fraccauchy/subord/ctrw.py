"""Continuous-time random walk with Pareto waiting times, scaled to approximate E(t)."""

import logging
from typing import Optional, Union

import numpy as np

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import BudgetExceededError, DomainError
from fraccauchy.specfun import gamma_fn
from fraccauchy.subord.rng import RngStream, Size
from fraccauchy.subord.stable import StableIndex

logger = logging.getLogger(__name__)


def ctrw_count(
    idx: StableIndex,
    c: float,
    t: float,
    r: RngStream,
    size: Size = None,
    budget: Optional[int] = None,
) -> Union[float, np.ndarray]:
    """
    Scaled renewal count c^-beta N(ct).

    Waiting times are J = (Gamma(1 - beta) U)^(-1/beta), a pure Pareto law with
    P(J > u) = u^-beta / Gamma(1 - beta). That tail constant puts the sums of
    waiting times in the domain of attraction of D with E[exp(-s D(1))] =
    exp(-s^beta), so the scaled count converges to E(t) itself.
    Independent runs advance together; each loop iteration adds one waiting
    time to every run that has not yet passed ct.

    Raises:
        BudgetExceededError: if a run needs more than `budget` renewals
    """
    if idx.degenerate:
        raise DomainError("CTRW waiting times need beta < 1")
    if not c >= 1.0:
        raise DomainError(f"scale must be >= 1, got {c}")
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    budget = budget or get_settings().ctrw_budget

    n_runs = 1 if size is None else int(np.prod(size))
    horizon = c * t
    wait_scale = gamma_fn(1.0 - idx.beta) ** (-1.0 / idx.beta)
    elapsed = np.zeros(n_runs)
    counts = np.zeros(n_runs, dtype=np.int64)
    active = np.ones(n_runs, dtype=bool)

    steps = 0
    while active.any():
        if steps >= budget:
            raise BudgetExceededError(f"CTRW renewal loop (c={c:g}, t={t:g})", budget)
        running = np.flatnonzero(active)
        elapsed[running] += wait_scale * r.uniform_open(running.size) ** (-1.0 / idx.beta)
        renewed = elapsed[running] <= horizon
        counts[running[renewed]] += 1
        active[running[~renewed]] = False
        steps += 1

    logger.debug(f"CTRW c={c:g} t={t:g}: {n_runs} runs finished after {steps} renewals")
    scaled = counts * c ** (-idx.beta)
    return float(scaled[0]) if size is None else scaled.reshape(size)
