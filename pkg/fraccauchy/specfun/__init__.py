"""Gamma and Mittag-Leffler kernels shared by every engine."""

from .gamma import GAMMA_CEILING, gamma_fn
from .kernels import laplace_inversion_integral
from .mittag_leffler import (
    MLQuery,
    mittag_leffler,
    mittag_leffler_array,
    ml_integral,
    ml_series,
    ml_tail_constant,
    switchover,
    switchover_fault,
)

__all__ = [
    'GAMMA_CEILING',
    'MLQuery',
    'gamma_fn',
    'laplace_inversion_integral',
    'mittag_leffler',
    'mittag_leffler_array',
    'ml_integral',
    'ml_series',
    'ml_tail_constant',
    'switchover',
    'switchover_fault',
]
