"""FieldSample: one solution snapshot emitted by either engine."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np


class Engine(str, Enum):
    SPECTRAL = "spectral"
    MONTECARLO = "montecarlo"


@dataclass(frozen=True, eq=False)
class FieldSample:
    """
    Attributes:
        t: Evaluation time
        points: Spatial points, shape (P, d)
        values: Solution values, shape (P,)
        tail_bound: Bound on the truncation (spectral) or bias (Monte Carlo) error
        engine_tag: Engine that produced the values
        stderr: Per-point standard errors (Monte Carlo only)
    """
    t: float
    points: np.ndarray
    values: np.ndarray
    tail_bound: float
    engine_tag: Engine = Engine.SPECTRAL
    stderr: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.points.shape[0] != self.values.shape[0]:
            raise ValueError(f"{self.points.shape[0]} points but {self.values.shape[0]} values")
        self.points.setflags(write=False)
        self.values.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.points.shape[1]
