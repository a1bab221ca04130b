"""
Eigenvalue solution h(t, lam) of the distributed-order problem

    D^(mu) h = -lam h,  h(0) = 1,

through the real-axis inversion of its Laplace transform
psi(s) / (s (lam + psi(s))) with psi = psi_W. On the cut s = -r,
psi(r e^{i pi}) = C(r) + i S(r) where

    S(r) = int sin(pi beta) Gamma(1 - beta) r^beta mu(d beta)
    C(r) = int cos(pi beta) Gamma(1 - beta) r^beta mu(d beta).

A single atom with unit Caputo coefficient gives back M_beta(-lam t^beta).
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import special

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import DomainError, QuadratureError
from fraccauchy.distorder.measure import OrderMeasure, sine_constant, validate_measure
from fraccauchy.specfun import gamma_fn, laplace_inversion_integral

logger = logging.getLogger(__name__)

H_EIGEN_ABS_TOL = 1e-8


@dataclass(frozen=True)
class EigenSolution:
    t: float
    lam: float
    value: float
    est_error: float


def _cut_parts(m: OrderMeasure) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(betas, sine coefficients, cosine coefficients) of S and C."""
    betas, masses = m.point_masses
    nu = masses * special.gamma(1.0 - betas)
    return betas, nu * np.sin(math.pi * betas), nu * np.cos(math.pi * betas)


def h_eigen(m: OrderMeasure, t: float, lam: float, validate: bool = True) -> EigenSolution:
    """
    Evaluate h(t, lam) by adaptive quadrature of the inversion integral.

    Raises:
        DomainError: for t <= 0 or lam <= 0
        MeasureValidationError: if m is not admissible
        QuadratureError: if the error estimate exceeds 1e-8
    """
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    if not lam > 0.0:
        raise DomainError(f"eigenvalue must be positive, got {lam}")
    if validate:
        validate_measure(m)

    settings = get_settings()
    betas, sin_coef, cos_coef = _cut_parts(m)

    def sin_part(r):
        return np.power(np.asarray(r)[..., None], betas) @ sin_coef

    def cos_part(r):
        return np.power(np.asarray(r)[..., None], betas) @ cos_coef

    value, error = laplace_inversion_integral(
        t=t,
        lam=lam,
        sin_part=sin_part,
        cos_part=cos_part,
        min_exponent=m.min_order,
        scale=float(np.sum(sin_coef)),
        rel_tol=1e-10,
        abs_tol=0.1 * H_EIGEN_ABS_TOL,
        limit=settings.quad_limit,
    )
    if error > H_EIGEN_ABS_TOL:
        raise QuadratureError(f"h_eigen(t={t:g}, lam={lam:g})", error, H_EIGEN_ABS_TOL)
    return EigenSolution(t=t, lam=lam, value=min(value, 1.0), est_error=error)


def h_eigen_values(m: OrderMeasure, t: float, lams: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """h(t, lam) and its error estimate for each distinct eigenvalue."""
    validate_measure(m)
    lams = np.asarray(lams, dtype=float)
    unique, inverse = np.unique(lams, return_inverse=True)
    solved = [h_eigen(m, t, float(lam), validate=False) for lam in unique]
    values = np.array([s.value for s in solved])[inverse].reshape(lams.shape)
    errors = np.array([s.est_error for s in solved])[inverse].reshape(lams.shape)
    return values, errors


def k_bound(m: OrderMeasure, t: float) -> float:
    """
    k(t) = [C pi]^-1 [Gamma(1 - beta1) t^(beta1 - 1) + Gamma(1 - beta0) t^(beta0 - 1)],
    so that |d/dt h(t, lam)| <= lam k(t) for a density-driven measure.
    """
    if m.density is None:
        raise DomainError("k_bound needs a measure with a density part")
    if not t > 0.0:
        raise DomainError(f"time must be positive, got {t}")
    d = m.density
    c_value = sine_constant(d)
    if not c_value > 0.0:
        raise DomainError(f"k_bound needs C > 0, got {c_value}")
    return (
        gamma_fn(1.0 - d.beta1) * t ** (d.beta1 - 1.0) + gamma_fn(1.0 - d.beta0) * t ** (d.beta0 - 1.0)
    ) / (c_value * math.pi)
