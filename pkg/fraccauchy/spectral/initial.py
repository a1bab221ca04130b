"""
Initial data families.

Config syntax (see parse_initial):

    mode 1            single eigenfunction (d integers in d dimensions)
    bump              prod_i x_i (L_i - x_i)
    sum 2:1 3:2       2 phi_1 + 3 phi_2; in d dimensions weight:n1,n2[,n3]
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

import numpy as np
from scipy import special

from fraccauchy.core.errors import ConfigError, DomainError
from fraccauchy.spectral.coefficients import (
    ModeCap,
    SpectralCoefficients,
    callable_tail_estimate,
    gauss_legendre_coefficients,
    resolve_mode_cap,
)
from fraccauchy.spectral.domain import BoxDomain, as_mode, eigenfunction

logger = logging.getLogger(__name__)

# sum over odd n of n^-3
_ODD_ZETA3 = 7.0 / 8.0 * float(special.zeta(3.0))


class InitialData(ABC):
    """Initial condition f on a box."""

    tag: str = "f"

    @abstractmethod
    def evaluate(self, dom: BoxDomain, points) -> np.ndarray:
        """f at points of shape (P, d)."""

    @abstractmethod
    def coefficients(self, dom: BoxDomain, max_mode: Tuple[int, ...]) -> SpectralCoefficients:
        pass

    @property
    def nonnegative(self) -> bool:
        return False


@dataclass(frozen=True)
class ModeSum(InitialData):
    """Finite combination sum_k w_k phi_{n_k}."""
    terms: Tuple[Tuple[Tuple[int, ...], float], ...]

    @classmethod
    def single(cls, n: Sequence[int], weight: float = 1.0) -> "ModeSum":
        return cls(terms=((tuple(n), float(weight)),))

    @property
    def tag(self) -> str:
        return " + ".join(f"{w:g}*phi{list(n)}" for n, w in self.terms)

    @property
    def nonnegative(self) -> bool:
        return len(self.terms) == 1 and all(v == 1 for v in self.terms[0][0]) and self.terms[0][1] >= 0.0

    def evaluate(self, dom: BoxDomain, points) -> np.ndarray:
        pts = dom.check_closed(points)
        total = np.zeros(pts.shape[0])
        for n, w in self.terms:
            total += w * np.atleast_1d(eigenfunction(dom, as_mode(dom, n), pts))
        return total

    def coefficients(self, dom: BoxDomain, max_mode: Tuple[int, ...]) -> SpectralCoefficients:
        coeffs = np.zeros(max_mode)
        outside = 0.0
        for n, w in self.terms:
            mode = as_mode(dom, n).n
            if all(k <= cap for k, cap in zip(mode, max_mode)):
                coeffs[tuple(k - 1 for k in mode)] += w
            else:
                outside += abs(w)
        return SpectralCoefficients(
            domain=dom,
            max_mode=max_mode,
            coeffs=coeffs,
            source_tag=self.tag,
            tail_l1=outside,
            l2_norm_sq=float(sum(w * w for _, w in self._merged().items())),
        )

    def _merged(self) -> Dict[Tuple[int, ...], float]:
        merged: Dict[Tuple[int, ...], float] = {}
        for n, w in self.terms:
            merged[tuple(n)] = merged.get(tuple(n), 0.0) + w
        return merged


@dataclass(frozen=True)
class Bump(InitialData):
    """prod_i x_i (L_i - x_i), scaled by `amplitude`."""
    amplitude: float = 1.0

    @property
    def tag(self) -> str:
        return "bump" if self.amplitude == 1.0 else f"{self.amplitude:g}*bump"

    @property
    def nonnegative(self) -> bool:
        return self.amplitude >= 0.0

    def evaluate(self, dom: BoxDomain, points) -> np.ndarray:
        pts = dom.check_closed(points)
        return self.amplitude * np.prod(pts * (np.asarray(dom.lengths) - pts), axis=1)

    @staticmethod
    def axis_coefficients(length: float, n_max: int) -> np.ndarray:
        """int_0^L x (L - x) phi_n(x) dx = sqrt(2/L) 4 L^3 / (n pi)^3 for odd n, 0 for even n."""
        n = np.arange(1, n_max + 1)
        values = math.sqrt(2.0 / length) * 4.0 * length ** 3 / (n * math.pi) ** 3
        values[n % 2 == 0] = 0.0
        return values

    def coefficients(self, dom: BoxDomain, max_mode: Tuple[int, ...]) -> SpectralCoefficients:
        per_axis = [self.axis_coefficients(L, n) for L, n in zip(dom.lengths, max_mode)]
        coeffs = np.ones(())
        for c in per_axis:
            coeffs = np.multiply.outer(coeffs, c)

        # l1 norms per axis: resolved part and the remaining odd-n tail
        resolved = [float(np.sum(np.abs(c))) for c in per_axis]
        tails = [
            math.sqrt(2.0 / L) * 4.0 * L ** 3 / math.pi ** 3 * _ODD_ZETA3 - r
            for L, r in zip(dom.lengths, resolved)
        ]
        tail_l1 = 0.0
        for i, t in enumerate(tails):
            tail_l1 += max(t, 0.0) * math.prod(r + q for r, q in zip(resolved[:i], tails[:i])) * math.prod(resolved[i + 1:])

        return SpectralCoefficients(
            domain=dom,
            max_mode=max_mode,
            coeffs=self.amplitude * coeffs,
            source_tag=self.tag,
            tail_l1=abs(self.amplitude) * tail_l1,
            l2_norm_sq=self.amplitude ** 2 * math.prod(L ** 5 / 30.0 for L in dom.lengths),
        )


@dataclass(frozen=True, eq=False)
class CallableData(InitialData):
    """Arbitrary bounded f given as a vectorized function of points (P, d) -> (P,)."""
    func: Callable[[np.ndarray], np.ndarray]
    name: str = "callable"
    is_nonnegative: bool = False

    @property
    def tag(self) -> str:
        return self.name

    @property
    def nonnegative(self) -> bool:
        return self.is_nonnegative

    def evaluate(self, dom: BoxDomain, points) -> np.ndarray:
        return np.asarray(self.func(dom.check_closed(points)), dtype=float)

    def coefficients(self, dom: BoxDomain, max_mode: Tuple[int, ...]) -> SpectralCoefficients:
        coeffs, l2 = gauss_legendre_coefficients(self.func, dom, max_mode)
        tail = callable_tail_estimate(self.func, dom, max_mode)
        return SpectralCoefficients(
            domain=dom,
            max_mode=max_mode,
            coeffs=coeffs,
            source_tag=self.tag,
            tail_l1=tail,
            tail_exact=False,
            l2_norm_sq=l2,
        )


def project(f: InitialData, dom: BoxDomain, n: ModeCap = None) -> SpectralCoefficients:
    """
    Coefficients of f against phi_n for n_i <= N_i (N from the config mode cap by default).

    Raises:
        BudgetExceededError: if quadrature would exceed the point budget
    """
    max_mode = resolve_mode_cap(dom, n)
    result = f.coefficients(dom, max_mode)
    if result.l2_norm_sq is not None:
        energy = float(np.sum(result.coeffs ** 2))
        if energy > result.l2_norm_sq * (1.0 + 1e-10) + 1e-12:
            logger.warning(
                f"projection of {f.tag} violates Bessel's inequality: {energy:.12g} > {result.l2_norm_sq:.12g}"
            )
    logger.debug(f"projected {f.tag} onto modes {max_mode}: tail_l1={result.tail_l1:.3e}")
    return result


def _parse_mode(token: str, d: int) -> Tuple[int, ...]:
    try:
        mode = tuple(int(v) for v in token.split(","))
    except ValueError:
        raise ConfigError(f"invalid mode {token!r}")
    if len(mode) != d or any(v < 1 for v in mode):
        raise ConfigError(f"mode {token!r} must have {d} positive components")
    return mode


def parse_initial(text: str, dom: BoxDomain) -> InitialData:
    """Parse the initial-data config syntax."""
    kind, *args = text.split() or [""]
    if kind == "mode":
        if len(args) != dom.d:
            raise ConfigError(f"'mode' needs {dom.d} indices, got {args}")
        return ModeSum.single(_parse_mode(",".join(args), dom.d))
    if kind == "bump":
        if len(args) > 1:
            raise ConfigError(f"'bump' takes at most an amplitude, got {args}")
        try:
            return Bump(float(args[0])) if args else Bump()
        except ValueError:
            raise ConfigError(f"invalid bump amplitude {args[0]!r}")
    if kind == "sum":
        if not args:
            raise ConfigError("'sum' needs at least one weight:mode term")
        terms = []
        for token in args:
            weight, sep, mode = token.partition(":")
            if not sep:
                raise ConfigError(f"sum term {token!r} must look like weight:mode")
            try:
                w = float(weight)
            except ValueError:
                raise ConfigError(f"invalid weight in sum term {token!r}")
            terms.append((_parse_mode(mode, dom.d), w))
        return ModeSum(terms=tuple(terms))
    raise ConfigError(f"unknown initial data {text!r}; expected mode, bump or sum")
