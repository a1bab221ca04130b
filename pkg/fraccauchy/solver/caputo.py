"""L1 discretisation of the Caputo derivative on a uniform grid."""

import math

import numpy as np

from fraccauchy.core.errors import DomainError
from fraccauchy.specfun import gamma_fn


def l1_weights(beta: float, k: int) -> np.ndarray:
    """b_j = (j + 1)^(1 - beta) - j^(1 - beta), j = 0..k-1."""
    j = np.arange(k, dtype=float)
    return (j + 1.0) ** (1.0 - beta) - j ** (1.0 - beta)


def caputo_l1(g: np.ndarray, beta: float, dt: float) -> np.ndarray:
    """
    Caputo derivative of order beta from samples g(t_0), ..., g(t_K), t_k = k dt.

    The derivative of g is taken piecewise constant between nodes and the
    kernel (t_k - r)^-beta is integrated exactly on each subinterval, giving

        D_k = [Gamma(2 - beta) dt^beta]^-1 sum_{j<k} b_j (g_{k-j} - g_{k-j-1}).

    The value at t_0 is 0.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 1 or g.size < 3:
        raise DomainError(f"caputo_l1 needs at least three samples, got shape {g.shape}")
    if not 0.0 < beta < 1.0:
        raise DomainError(f"caputo_l1 order must lie in (0, 1), got {beta}")
    if not dt > 0.0:
        raise DomainError(f"grid step must be positive, got {dt}")

    k = g.size - 1
    diffs = np.diff(g)
    out = np.zeros(g.size)
    out[1:] = np.convolve(diffs, l1_weights(beta, k))[:k]
    return out / (gamma_fn(2.0 - beta) * dt ** beta)


def uniform_grid(dt: float, t_max: float) -> np.ndarray:
    """Nodes 0, dt, ..., t_max; t_max must be a multiple of dt."""
    if not dt > 0.0 or not t_max > 0.0:
        raise DomainError(f"grid needs dt > 0 and t_max > 0, got dt={dt}, t_max={t_max}")
    k = int(round(t_max / dt))
    if k < 2 or not math.isclose(k * dt, t_max, rel_tol=1e-9):
        raise DomainError(f"t_max={t_max} is not a multiple of dt={dt} with at least two steps")
    return dt * np.arange(k + 1)
