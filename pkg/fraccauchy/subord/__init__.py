"""Stable subordinators, their inverses, and the CTRW scaling demonstrator."""

from .ctrw import ctrw_count
from .inverse import inverse_density, inverse_from_stable, inverse_moment, sample_inverse
from .rng import RngStream
from .stable import StableIndex, sample_stable, sample_stable_at, stable_cdf, stable_density
from .summary import SampleSummary, summarize

__all__ = [
    'RngStream',
    'SampleSummary',
    'StableIndex',
    'ctrw_count',
    'inverse_density',
    'inverse_from_stable',
    'inverse_moment',
    'sample_inverse',
    'sample_stable',
    'sample_stable_at',
    'stable_cdf',
    'stable_density',
    'summarize',
]
