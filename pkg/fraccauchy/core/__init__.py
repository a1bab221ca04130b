"""Core configuration and error types."""

from .config import AppConfig, get_settings
from .errors import (
    BudgetExceededError,
    ConfigError,
    ConvergenceError,
    DomainError,
    FracCauchyError,
    MeasureValidationError,
    QuadratureError,
    TruncationError,
)
from .runconfig import RunConfig, load_run_config, parse_config_text, parse_overrides

__all__ = [
    'AppConfig',
    'get_settings',
    'BudgetExceededError',
    'ConfigError',
    'ConvergenceError',
    'DomainError',
    'FracCauchyError',
    'MeasureValidationError',
    'QuadratureError',
    'TruncationError',
    'RunConfig',
    'load_run_config',
    'parse_config_text',
    'parse_overrides',
]
