"""Dirichlet eigenpairs on boxes, projection of initial data, heat kernel and killed semigroup."""

from .coefficients import SpectralCoefficients, resolve_mode_cap
from .domain import BoxDomain, ModeIndex, axis_modes, eigenfunction, eigenvalue, eigenvalue_grid
from .initial import Bump, CallableData, InitialData, ModeSum, parse_initial, project
from .series import SeriesValue, check_tail, heat_kernel, semigroup_apply, series_at_points
from .tails import heat_tail, inverse_square_tail, tail_mode_bound

__all__ = [
    'BoxDomain',
    'Bump',
    'CallableData',
    'InitialData',
    'ModeIndex',
    'ModeSum',
    'SeriesValue',
    'SpectralCoefficients',
    'axis_modes',
    'check_tail',
    'eigenfunction',
    'eigenvalue',
    'eigenvalue_grid',
    'heat_kernel',
    'heat_tail',
    'inverse_square_tail',
    'parse_initial',
    'project',
    'resolve_mode_cap',
    'semigroup_apply',
    'series_at_points',
    'tail_mode_bound',
]
