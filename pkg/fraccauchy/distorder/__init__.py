"""Distributed-order machinery: order measures, Laplace exponents, eigenvalue solutions, composite subordinators."""

from .composite import (
    composite_scales,
    g_density_mc,
    sample_composite_subordinator,
    sample_inverse_composite,
)
from .eigen import EigenSolution, h_eigen, h_eigen_values, k_bound
from .exponents import levy_tail, psi_w
from .measure import (
    DensityPart,
    MeasureDiagnostics,
    OrderMeasure,
    caputo_weights,
    load_measure,
    parse_measure,
    validate_measure,
)

__all__ = [
    'DensityPart',
    'EigenSolution',
    'MeasureDiagnostics',
    'OrderMeasure',
    'caputo_weights',
    'composite_scales',
    'g_density_mc',
    'h_eigen',
    'h_eigen_values',
    'k_bound',
    'levy_tail',
    'load_measure',
    'parse_measure',
    'psi_w',
    'sample_composite_subordinator',
    'sample_inverse_composite',
    'validate_measure',
]
