"""
Block-parallel Monte-Carlo driver.

Paths are grouped in blocks of fixed size; block b draws every random number
from RngStream(seed, base_stream + b). Blocks are mapped in order and
reduced with exact summation, so results do not depend on the thread count.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from fraccauchy.subord import RngStream, SampleSummary

logger = logging.getLogger(__name__)

BlockFn = Callable[[RngStream, int], np.ndarray]


def block_sizes(n_paths: int, block_size: int):
    full, rest = divmod(n_paths, block_size)
    return [block_size] * full + ([rest] if rest else [])


def run_blocks(
    block_fn: BlockFn,
    n_paths: int,
    seed: int,
    block_size: int,
    threads: int = 1,
    base_stream: int = 0,
) -> SampleSummary:
    """
    Evaluate block_fn(stream, size) for every block and summarise the per-path values.

    Returns:
        SampleSummary over all n_paths contributions
    """
    sizes = block_sizes(n_paths, block_size)

    def run(item):
        b, size = item
        values = np.asarray(block_fn(RngStream(seed, base_stream + b), size), dtype=float)
        logger.debug(f"block {b + 1}/{len(sizes)} done ({size} paths)")
        return values

    if threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            blocks = list(executor.map(run, enumerate(sizes)))
    else:
        blocks = [run(item) for item in enumerate(sizes)]

    values = np.concatenate(blocks)
    n = values.size
    mean = math.fsum(values) / n
    variance = math.fsum((values - mean) ** 2) / (n - 1)
    return SampleSummary(n=n, mean=mean, std_error=math.sqrt(variance / n))
