"""Sample mean with standard error."""

import math
from dataclasses import dataclass

import numpy as np

from fraccauchy.core.errors import DomainError


@dataclass(frozen=True)
class SampleSummary:
    n: int
    mean: float
    std_error: float

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"a summary needs at least two samples, got {self.n}")

    def within(self, reference: float, sigmas: float = 3.0, slack: float = 0.0) -> bool:
        """True if |mean - reference| <= sigmas * std_error + slack."""
        return abs(self.mean - reference) <= sigmas * self.std_error + slack


def summarize(values) -> SampleSummary:
    values = np.asarray(values, dtype=float).ravel()
    n = values.size
    if n < 2:
        raise DomainError(f"a summary needs at least two samples, got {n}")
    return SampleSummary(
        n=n,
        mean=float(np.mean(values)),
        std_error=float(np.std(values, ddof=1)) / math.sqrt(n),
    )
