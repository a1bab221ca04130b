"""Truncated eigenfunction coefficients of initial data, and their projection."""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial.legendre import leggauss

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import BudgetExceededError, DomainError
from fraccauchy.spectral.domain import BoxDomain, axis_modes, eigenvalue_grid
from fraccauchy.spectral.tails import inverse_square_tail, tail_mode_bound

logger = logging.getLogger(__name__)

ModeCap = Union[int, Sequence[int], None]


@dataclass(frozen=True, eq=False)
class SpectralCoefficients:
    """
    Coefficients f_bar(n) = <f, phi_n> for 1 <= n_i <= max_mode[i].

    tail_l1 bounds sum |f_bar(n)| over the modes left out; it is exact for
    closed-form data and an estimate for projected callables (tail_exact).
    """
    domain: BoxDomain
    max_mode: Tuple[int, ...]
    coeffs: np.ndarray
    source_tag: str
    tail_l1: float = 0.0
    tail_exact: bool = True
    l2_norm_sq: Optional[float] = None

    def __post_init__(self):
        if self.coeffs.shape != tuple(self.max_mode):
            raise DomainError(f"coefficient tensor shape {self.coeffs.shape} does not match {self.max_mode}")
        self.coeffs.setflags(write=False)

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return eigenvalue_grid(self.domain, self.max_mode)

    @cached_property
    def mu_tail(self) -> float:
        """Smallest eigenvalue among the truncated modes."""
        return tail_mode_bound(self.domain, self.max_mode)

    @property
    def abs_sum(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    def amplitude_bound(self) -> float:
        """sum |f_bar(n)| sup|phi_n| over all modes, resolved or not."""
        return (self.abs_sum + self.tail_l1) * self.domain.sup_phi

    def combine(self, other: "SpectralCoefficients", a: float, b: float) -> "SpectralCoefficients":
        """Coefficients of a f + b g."""
        if other.domain != self.domain or other.max_mode != self.max_mode:
            raise DomainError("can only combine coefficients on the same box and mode cap")
        return SpectralCoefficients(
            domain=self.domain,
            max_mode=self.max_mode,
            coeffs=a * self.coeffs + b * other.coeffs,
            source_tag=f"{a:g}*({self.source_tag}) + {b:g}*({other.source_tag})",
            tail_l1=abs(a) * self.tail_l1 + abs(b) * other.tail_l1,
            tail_exact=self.tail_exact and other.tail_exact,
        )


def resolve_mode_cap(dom: BoxDomain, n: ModeCap) -> Tuple[int, ...]:
    if n is None:
        n = get_settings().mode_cap(dom.d)
    caps = (int(n),) * dom.d if np.isscalar(n) else tuple(int(v) for v in n)
    if len(caps) != dom.d or any(v < 1 for v in caps):
        raise DomainError(f"mode cap {n} is not valid for a {dom.d}-dimensional box")
    return caps


def gauss_legendre_coefficients(
    func, dom: BoxDomain, max_mode: Sequence[int], margin: Optional[int] = None
) -> Tuple[np.ndarray, float]:
    """
    Tensor Gauss-Legendre projection with 2 N_i + margin nodes per axis.

    Returns:
        (coefficient tensor, quadrature of f^2)

    Raises:
        BudgetExceededError: if the tensor grid exceeds the projection point budget
    """
    settings = get_settings()
    margin = settings.node_margin if margin is None else margin
    counts = [2 * n + margin for n in max_mode]
    n_points = math.prod(counts)
    if n_points > settings.projection_point_budget:
        raise BudgetExceededError(f"projection grid of {n_points} points", settings.projection_point_budget)

    axes = []
    weighted_modes = []
    quad_weights = []
    for count, n_max, length in zip(counts, max_mode, dom.lengths):
        x, w = leggauss(count)
        nodes = 0.5 * length * (x + 1.0)
        weights = 0.5 * length * w
        axes.append(nodes)
        quad_weights.append(weights)
        weighted_modes.append(weights[:, None] * axis_modes(length, n_max, nodes))

    mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    values = np.asarray(func(mesh.reshape(-1, dom.d)), dtype=float).reshape(counts)

    coeffs = values
    weight_tensor = np.ones(())
    for wm, weights in zip(weighted_modes, quad_weights):
        coeffs = np.tensordot(coeffs, wm, axes=([0], [0]))
        weight_tensor = np.multiply.outer(weight_tensor, weights)
    l2 = float(np.sum(weight_tensor * values ** 2))
    return coeffs, l2


def callable_tail_estimate(func, dom: BoxDomain, max_mode: Sequence[int], extension: int = 4) -> float:
    """
    Estimate of sum |f_bar(n)| outside the box by Cauchy-Schwarz,

        sqrt(sum mu^2 f_bar^2) * sqrt(sum mu^-2),

    where the energy is measured on the modes of the box enlarged `extension` times.
    """
    outer = tuple(extension * n for n in max_mode)
    try:
        wide, _ = gauss_legendre_coefficients(func, dom, outer)
    except BudgetExceededError:
        logger.warning(f"tail estimate for callable data skipped: grid for modes {outer} over budget")
        return math.inf
    mu = eigenvalue_grid(dom, outer)
    energy = mu ** 2 * wide ** 2
    inner = tuple(slice(0, n) for n in max_mode)
    ring_energy = float(np.sum(energy) - np.sum(energy[inner]))
    return math.sqrt(max(ring_energy, 0.0)) * math.sqrt(inverse_square_tail(dom, max_mode, extension))
