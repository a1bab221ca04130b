"""
Order measures on (0, 1).

A measure is a finite list of atoms (beta_i, w_i) plus an optional density
p(beta) on [beta0, beta1] integrated by Gauss-Legendre. Weights are masses of
the mixing measure; the Caputo coefficient of an atom is w_i Gamma(1 - beta_i).

Measure file grammar (one directive per line, '#' starts a comment):

    atom    <beta> <weight>                      atom with mixing weight
    caputo  <beta> <coeff>                       atom given by its Caputo coefficient
    density <beta0> <beta1> <nodes> <profile> [scale]
                                                 profile: uniform (p = scale)
                                                          linear  (p = scale * beta)
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import special

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import ConfigError, MeasureValidationError
from fraccauchy.specfun import gamma_fn

logger = logging.getLogger(__name__)

MIN_DENSITY_NODES = 32

Profile = Callable[[np.ndarray], np.ndarray]

PROFILES: Dict[str, Profile] = {
    "uniform": lambda b: np.ones_like(b),
    "linear": lambda b: np.asarray(b, dtype=float),
}


@dataclass(frozen=True)
class DensityPart:
    """Continuous part p(beta) d beta on [beta0, beta1]."""
    beta0: float
    beta1: float
    nodes: int
    profile: Profile = field(default=PROFILES["uniform"], compare=False)
    name: str = "uniform"
    scale: float = 1.0

    @cached_property
    def rule(self) -> Tuple[np.ndarray, np.ndarray]:
        """(nodes, weights) of the Gauss-Legendre rule mapped onto [beta0, beta1]."""
        x, w = leggauss(self.nodes)
        half = 0.5 * (self.beta1 - self.beta0)
        return self.beta0 + half * (x + 1.0), half * w

    @cached_property
    def masses(self) -> Tuple[np.ndarray, np.ndarray]:
        """(beta_j, mass_j): the density as a weighted node set."""
        betas, weights = self.rule
        return betas, weights * self.scale * np.asarray(self.profile(betas), dtype=float)


@dataclass(frozen=True)
class OrderMeasure:
    atoms: Tuple[Tuple[float, float], ...] = ()
    density: Optional[DensityPart] = None

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple((float(b), float(w)) for b, w in self.atoms))

    @classmethod
    def single(cls, beta: float) -> "OrderMeasure":
        """One atom whose Caputo coefficient is 1, i.e. the plain derivative of order beta."""
        return cls(atoms=((beta, 1.0 / gamma_fn(1.0 - beta)),))

    @property
    def atoms_only(self) -> bool:
        return self.density is None and bool(self.atoms)

    @property
    def min_order(self) -> float:
        orders = [b for b, _ in self.atoms]
        if self.density is not None:
            orders.append(self.density.beta0)
        return min(orders)

    @property
    def max_order(self) -> float:
        orders = [b for b, _ in self.atoms]
        if self.density is not None:
            orders.append(self.density.beta1)
        return max(orders)

    @cached_property
    def point_masses(self) -> Tuple[np.ndarray, np.ndarray]:
        """Atoms and density nodes merged into (betas, mixing masses)."""
        betas = [np.array([b for b, _ in self.atoms], dtype=float)]
        masses = [np.array([w for _, w in self.atoms], dtype=float)]
        if self.density is not None:
            nb, nm = self.density.masses
            betas.append(nb)
            masses.append(nm)
        return np.concatenate(betas), np.concatenate(masses)

    def describe(self) -> str:
        parts = [f"atom({b:g}, {w:g})" for b, w in self.atoms]
        if self.density is not None:
            d = self.density
            parts.append(f"density({d.name}, [{d.beta0:g}, {d.beta1:g}], n={d.nodes}, scale={d.scale:g})")
        return " + ".join(parts) or "empty"


@dataclass(frozen=True)
class MeasureDiagnostics:
    total_mass: float
    inverse_gap_integral: float
    sine_constant: Optional[float]


def caputo_weights(m: OrderMeasure) -> np.ndarray:
    """Caputo coefficients nu_i = w_i Gamma(1 - beta_i) of the atoms."""
    return np.array([w * gamma_fn(1.0 - b) for b, w in m.atoms], dtype=float)


def sine_constant(d: DensityPart) -> float:
    """C = int sin(beta pi) Gamma(1 - beta) p(beta) d beta."""
    betas, masses = d.masses
    return float(np.sum(np.sin(math.pi * betas) * special.gamma(1.0 - betas) * masses))


def validate_measure(m: OrderMeasure, ceiling: Optional[float] = None) -> MeasureDiagnostics:
    """
    Check the well-posedness conditions of an order measure.

    Raises:
        MeasureValidationError: naming the first violated condition
    """
    ceiling = ceiling if ceiling is not None else get_settings().measure_ceiling

    if not m.atoms and m.density is None:
        raise MeasureValidationError("total_mass", "measure has neither atoms nor a density")

    previous = 0.0
    for beta, weight in m.atoms:
        if not 0.0 < beta < 1.0:
            raise MeasureValidationError("support", f"atom order {beta} outside (0, 1)")
        if not weight > 0.0:
            raise MeasureValidationError("weights", f"atom at {beta} has non-positive weight {weight}")
        if not beta > previous:
            raise MeasureValidationError("ordering", f"atom orders must increase strictly, got {beta} after {previous}")
        previous = beta

    total = sum(w for _, w in m.atoms)
    inverse_gap = 0.0
    c_value = None

    d = m.density
    if d is not None:
        if not 0.0 < d.beta0 < d.beta1 < 1.0:
            raise MeasureValidationError("support", f"density support [{d.beta0}, {d.beta1}] not inside (0, 1)")
        if d.nodes < MIN_DENSITY_NODES:
            raise MeasureValidationError("nodes", f"density needs at least {MIN_DENSITY_NODES} nodes, got {d.nodes}")
        betas, masses = d.masses
        if not np.all(np.isfinite(masses)) or np.any(masses < 0.0):
            raise MeasureValidationError("sign", "density must be finite and nonnegative at every node")
        total += float(np.sum(masses))
        inverse_gap = float(np.sum(masses / (1.0 - betas)))
        if not inverse_gap <= ceiling:
            raise MeasureValidationError(
                "finite_mu_bound",
                f"int p(beta)/(1-beta) d beta = {inverse_gap:.4g} exceeds ceiling {ceiling:.4g}",
            )
        c_value = sine_constant(d)
        if not c_value > 0.0:
            raise MeasureValidationError("sine_constant", f"C = {c_value:.4g} must be positive")

    if not (math.isfinite(total) and total > 0.0):
        raise MeasureValidationError("total_mass", f"total mass {total} must be finite and positive")

    logger.debug(f"validated {m.describe()}: mass={total:.6g} inverse_gap={inverse_gap:.6g}")
    return MeasureDiagnostics(total_mass=total, inverse_gap_integral=inverse_gap, sine_constant=c_value)


def _parse_float(token: str, line_no: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ConfigError(f"measure line {line_no}: expected a number, got {token!r}")


def parse_measure(text: str) -> OrderMeasure:
    """Parse the measure-file grammar; atoms are sorted by order."""
    atoms = []
    density = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()

        if kind in ("atom", "caputo"):
            if len(args) != 2:
                raise ConfigError(f"measure line {line_no}: '{kind}' takes <beta> <weight>")
            beta, value = (_parse_float(a, line_no) for a in args)
            if kind == "caputo":
                if not 0.0 < beta < 1.0:
                    raise ConfigError(f"measure line {line_no}: order {beta} outside (0, 1)")
                value = value / gamma_fn(1.0 - beta)
            atoms.append((beta, value))

        elif kind == "density":
            if density is not None:
                raise ConfigError(f"measure line {line_no}: only one density directive is allowed")
            if len(args) not in (4, 5):
                raise ConfigError(
                    f"measure line {line_no}: 'density' takes <beta0> <beta1> <nodes> <profile> [scale]"
                )
            profile_name = args[3]
            if profile_name not in PROFILES:
                raise ConfigError(
                    f"measure line {line_no}: unknown profile {profile_name!r} (known: {', '.join(PROFILES)})"
                )
            try:
                nodes = int(args[2])
            except ValueError:
                raise ConfigError(f"measure line {line_no}: node count must be an integer, got {args[2]!r}")
            density = DensityPart(
                beta0=_parse_float(args[0], line_no),
                beta1=_parse_float(args[1], line_no),
                nodes=nodes,
                profile=PROFILES[profile_name],
                name=profile_name,
                scale=_parse_float(args[4], line_no) if len(args) == 5 else 1.0,
            )

        else:
            raise ConfigError(f"measure line {line_no}: unknown directive {kind!r}")

    return OrderMeasure(atoms=tuple(sorted(atoms)), density=density)


def load_measure(path: Union[str, Path]) -> OrderMeasure:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"measure file not found: {path}")
    measure = parse_measure(path.read_text())
    logger.info(f"loaded order measure from {path}: {measure.describe()}")
    return measure
