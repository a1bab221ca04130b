"""Laplace exponent and Levy tail of the composite subordinator."""

from typing import Union

import numpy as np
from scipy import special

from fraccauchy.core.errors import DomainError
from fraccauchy.distorder.measure import OrderMeasure

ArrayLike = Union[float, np.ndarray]


def psi_w(m: OrderMeasure, s: ArrayLike) -> ArrayLike:
    """psi_W(s) = int s^beta Gamma(1 - beta) mu(d beta)."""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr < 0.0):
        raise DomainError(f"psi_w needs s >= 0, got {s}")
    betas, masses = m.point_masses
    coeffs = masses * special.gamma(1.0 - betas)
    values = np.power(s_arr[..., None], betas) @ coeffs
    return float(values) if np.ndim(s) == 0 else values


def levy_tail(m: OrderMeasure, t: ArrayLike) -> ArrayLike:
    """phi_W(t, inf) = int t^-beta mu(d beta)."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0.0):
        raise DomainError(f"levy_tail needs t > 0, got {t}")
    betas, masses = m.point_masses
    values = np.power(t_arr[..., None], -betas) @ masses
    return float(values) if np.ndim(t) == 0 else values
