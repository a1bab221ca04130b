"""Bounds on the part of an eigenfunction series outside the mode box n_i <= N_i."""

import math
from typing import Sequence

import numpy as np
from scipy import special

from fraccauchy.spectral.domain import BoxDomain, eigenvalue_grid

# Surface area of the unit sphere in R^d
_SPHERE_AREA = {1: 2.0, 2: 2.0 * math.pi, 3: 4.0 * math.pi}


def tail_mode_bound(dom: BoxDomain, max_mode: Sequence[int]) -> float:
    """Smallest eigenvalue of a mode outside the box."""
    inv_sq = [1.0 / (v * v) for v in dom.lengths]
    base = sum(inv_sq)
    return min(
        math.pi ** 2 * (base - inv_sq[i] + (n + 1) ** 2 * inv_sq[i])
        for i, n in enumerate(max_mode)
    )


def inverse_square_tail(dom: BoxDomain, max_mode: Sequence[int], extension: int = 4) -> float:
    """
    Upper bound on sum_{n outside box} mu_n^-2.

    Modes in the box enlarged `extension` times are summed directly; the rest
    is bounded by the integral of (pi rho)^-4 over the positive orthant beyond
    the enlarged box, with rho = |n / L|.
    """
    outer = [extension * n for n in max_mode]
    mu = eigenvalue_grid(dom, outer)
    inner = tuple(slice(0, n) for n in max_mode)
    ring = np.sum(mu ** -2.0) - np.sum(mu[inner] ** -2.0)

    d = dom.d
    radius = min(n / v for n, v in zip(outer, dom.lengths))
    cell_diagonal = math.sqrt(sum(1.0 / (v * v) for v in dom.lengths))
    reach = radius - cell_diagonal
    if reach <= 0.0:
        return math.inf
    remainder = (
        dom.volume * math.pi ** -4 * _SPHERE_AREA[d] / 2 ** d * reach ** (d - 4.0) / (4.0 - d)
    )
    return float(ring + remainder)


def heat_tail(dom: BoxDomain, t: float, max_mode: Sequence[int]) -> float:
    """
    Upper bound on sum_{n outside box} exp(-mu_n t).

    The sum factorises over axes: prod_i (S_i + R_i) - prod_i S_i, with S_i
    the resolved 1D sums and R_i bounded by a Gaussian tail integral. The
    difference is expanded telescopically so no cancellation occurs.
    """
    resolved = []
    remainders = []
    for n_max, length in zip(max_mode, dom.lengths):
        c = math.pi ** 2 * t / (length * length)
        k = np.arange(1, n_max + 1)
        resolved.append(float(np.sum(np.exp(-c * k * k))))
        remainders.append(0.5 * math.sqrt(math.pi / c) * float(special.erfc(n_max * math.sqrt(c))))
    total = 0.0
    for i, r in enumerate(remainders):
        total += (
            r
            * math.prod(s + q for s, q in zip(resolved[:i], remainders[:i]))
            * math.prod(resolved[i + 1:])
        )
    return total
