"""Enumeration types for the validation suite"""

from enum import Enum


class CheckStatus(str, Enum):
    """Outcome of one acceptance check"""

    PASS = "PASS"
    """Measured error within the check's tolerance"""

    FAIL = "FAIL"
    """Computation finished but the measured error exceeds the tolerance"""

    ERROR = "ERROR"
    """An engine raised (convergence failure, budget exceeded, bad parameters)"""
