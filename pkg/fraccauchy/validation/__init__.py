"""Cross-engine acceptance suite behind the `validate` command."""

from .checks import CHECKS, CheckContext, CheckOutcome
from .enums import CheckStatus
from .models import DEFAULT_SUITE, CheckResult, CheckSpec, ValidationReport, ValidationSuite
from .runner import FAULTS, run_check, run_suite

__all__ = [
    'CHECKS',
    'CheckContext',
    'CheckOutcome',
    'CheckResult',
    'CheckSpec',
    'CheckStatus',
    'DEFAULT_SUITE',
    'FAULTS',
    'ValidationReport',
    'ValidationSuite',
    'run_check',
    'run_suite',
]
