"""Monte-Carlo engine: killed Brownian motion run to an independent inverse-subordinator clock."""

from .config import McConfig
from .engine import block_sizes, run_blocks
from .estimators import bias_allowance, mc_field, mc_solve, mc_solve_distributed, mc_solve_fractional
from .killed_bm import run_killed_bm, run_killed_bm_batch

__all__ = [
    'McConfig',
    'bias_allowance',
    'block_sizes',
    'mc_field',
    'mc_solve',
    'mc_solve_distributed',
    'mc_solve_fractional',
    'run_blocks',
    'run_killed_bm',
    'run_killed_bm_batch',
]
