"""Spectral solutions of the heat, fractional and distributed-order Cauchy problems, and their residual checks."""

from .caputo import caputo_l1, l1_weights, uniform_grid
from .field import Engine, FieldSample
from .residual import ResidualResult, convergence_rate, eigen_residual, ml_profile_caputo, residual_check
from .series import (
    OrderSpec,
    describe_order,
    ml_decay_bound,
    solve,
    solve_distributed,
    solve_fractional,
    solve_heat,
)

__all__ = [
    'Engine',
    'FieldSample',
    'OrderSpec',
    'ResidualResult',
    'caputo_l1',
    'convergence_rate',
    'describe_order',
    'eigen_residual',
    'l1_weights',
    'ml_decay_bound',
    'ml_profile_caputo',
    'residual_check',
    'solve',
    'solve_distributed',
    'solve_fractional',
    'solve_heat',
    'uniform_grid',
]
