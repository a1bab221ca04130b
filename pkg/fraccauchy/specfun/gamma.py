"""Gamma function with an explicit double-range domain."""

import math

from scipy import special

from fraccauchy.core.errors import DomainError

# Gamma(171.6) overflows a double
GAMMA_CEILING = 171.0


def gamma_fn(x: float) -> float:
    """
    Gamma function on (0, 171).

    Raises:
        DomainError: for x <= 0, x >= 171 or NaN
    """
    if math.isnan(x) or x <= 0.0 or x >= GAMMA_CEILING:
        raise DomainError(f"gamma_fn is defined on (0, {GAMMA_CEILING:g}), got {x!r}")
    return float(special.gamma(x))
