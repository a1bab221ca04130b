"""
Brownian motion with generator Laplacian (per-axis increment variance 2 h)
killed on leaving the closed box.

The clock of each path is split into n = ceil(clock / dt) steps, the last one
of length clock - (n - 1) dt. Exit is checked at step ends only.
"""

import math
from typing import Sequence, Tuple

import numpy as np

from fraccauchy.core.errors import BudgetExceededError, DomainError
from fraccauchy.mcsolver.config import McConfig
from fraccauchy.spectral import BoxDomain
from fraccauchy.subord import RngStream


def run_killed_bm_batch(
    dom: BoxDomain,
    x0: Sequence[float],
    clocks: np.ndarray,
    dt: float,
    r: RngStream,
    budget: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Run one path per clock from x0.

    Returns:
        (alive flags, endpoints of shape (P, d))

    Raises:
        BudgetExceededError: if a path is still alive after `budget` steps short of its clock
    """
    clocks = np.asarray(clocks, dtype=float)
    if np.any(clocks < 0.0):
        raise DomainError("clocks must be nonnegative")
    upper = np.asarray(dom.lengths)
    n_paths = clocks.size

    position = np.tile(np.asarray(x0, dtype=float), (n_paths, 1))
    steps = np.ceil(clocks / dt).astype(np.int64)
    last = clocks - (steps - 1) * dt
    alive = np.ones(n_paths, dtype=bool)

    k = 0
    while True:
        running = np.flatnonzero(alive & (steps > k))
        if running.size == 0:
            break
        if k >= budget:
            raise BudgetExceededError(f"killed Brownian motion (dt={dt:g})", budget)
        h = np.where(steps[running] == k + 1, last[running], dt)
        position[running] += np.sqrt(2.0 * h)[:, None] * r.normal((running.size, dom.d))
        inside = np.all((position[running] >= 0.0) & (position[running] <= upper), axis=1)
        alive[running[~inside]] = False
        k += 1

    return alive, position


def run_killed_bm(
    dom: BoxDomain, x0: Sequence[float], clock: float, cfg: McConfig, r: RngStream
) -> Tuple[bool, np.ndarray]:
    """Single path: (alive, endpoint)."""
    if not dom.is_interior(x0):
        raise DomainError(f"start point {x0} must lie strictly inside the box {dom.lengths}")
    if not clock >= 0.0 or not math.isfinite(clock):
        raise DomainError(f"clock must be finite and nonnegative, got {clock}")
    alive, position = run_killed_bm_batch(dom, x0, np.array([clock]), cfg.dt, r, cfg.budget)
    return bool(alive[0]), position[0]
