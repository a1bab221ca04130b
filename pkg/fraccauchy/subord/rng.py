"""
Counter-based random streams.

Each (seed, stream_id) pair keys its own Philox generator, so streams can be
handed to workers in any order and still reproduce bit for bit.
"""

from typing import Optional, Tuple, Union

import numpy as np

from fraccauchy.core.errors import DomainError

_U64 = 1 << 64

Size = Optional[Union[int, Tuple[int, ...]]]


class RngStream:
    """Deterministic, independently keyed pseudo-random stream."""

    def __init__(self, seed: int, stream_id: int = 0):
        if not 0 <= seed < _U64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if not 0 <= stream_id < _U64:
            raise DomainError(f"stream_id must be a 64-bit unsigned integer, got {stream_id}")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self._gen = np.random.Generator(np.random.Philox(key=(self.stream_id << 64) | self.seed))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    def uniform_open(self, size: Size = None) -> Union[float, np.ndarray]:
        """Uniform draws on the open-at-zero interval (0, 1]."""
        return 1.0 - self._gen.random(size)

    def exponential(self, size: Size = None) -> Union[float, np.ndarray]:
        return self._gen.standard_exponential(size)

    def normal(self, size: Size = None) -> Union[float, np.ndarray]:
        return self._gen.standard_normal(size)
