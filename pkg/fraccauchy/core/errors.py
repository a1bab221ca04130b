"""
Exception hierarchy for the solver engines.

Every engine raises a subclass of FracCauchyError so the CLI can map
failures to exit codes without knowing which module produced them.
"""

from typing import Optional


class FracCauchyError(Exception):
    """Base class for all library errors."""


class DomainError(FracCauchyError, ValueError):
    """Argument outside the domain of an operation."""


class ConfigError(FracCauchyError):
    """Run configuration is missing, malformed, or references missing files."""


class MeasureValidationError(FracCauchyError, ValueError):
    """Order measure violates a well-posedness condition."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class ConvergenceError(FracCauchyError):
    """An iterative evaluator did not reach the requested tolerance."""

    def __init__(self, message: str, achieved: float, requested: float):
        super().__init__(f"{message} (achieved {achieved:.3e}, requested {requested:.3e})")
        self.achieved = achieved
        self.requested = requested


class QuadratureError(ConvergenceError):
    """Adaptive quadrature error estimate exceeds the contract."""


class TruncationError(FracCauchyError):
    """Series tail bound exceeds the configured tolerance."""

    def __init__(self, tail_bound: float, tolerance: float, where: Optional[str] = None):
        location = f" in {where}" if where else ""
        super().__init__(
            f"Truncation tail bound {tail_bound:.3e} exceeds tolerance {tolerance:.3e}{location}; "
            f"raise the mode cap or the evaluation time"
        )
        self.tail_bound = tail_bound
        self.tolerance = tolerance


class BudgetExceededError(FracCauchyError):
    """A simulation loop ran past its step budget."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what} exceeded step budget of {budget}")
        self.budget = budget
