"""
Resource Profiling Utilities

Tools for reporting what a validation check cost:
- Wall-clock timing
- Process memory (RSS) before and after
- CPU and memory snapshots of the whole machine
"""

import logging
import os
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Dict, Iterator

import psutil

logger = logging.getLogger(__name__)


@dataclass
class ResourceUsage:
    """Cost of one timed section."""

    wall_s: float = 0.0
    rss_start_mb: float = 0.0
    rss_end_mb: float = 0.0

    @property
    def rss_delta_mb(self) -> float:
        return self.rss_end_mb - self.rss_start_mb


class ResourceMonitor:
    """Snapshots of this process and the machine it runs on."""

    def __init__(self):
        self.process = psutil.Process(os.getpid())

    def rss_mb(self) -> float:
        return self.process.memory_info().rss / 1024 / 1024

    def get_cpu_usage(self) -> Dict[str, float]:
        return {
            "process_percent": self.process.cpu_percent(interval=None),
            "num_cpus": psutil.cpu_count(),
            "physical_cpus": psutil.cpu_count(logical=False) or 1,
        }

    def get_memory_usage(self) -> Dict[str, float]:
        """Process RSS and machine-wide memory, in MB."""
        sys_mem = psutil.virtual_memory()
        return {
            "process_rss_mb": self.rss_mb(),
            "system_total_mb": sys_mem.total / 1024 / 1024,
            "system_available_mb": sys_mem.available / 1024 / 1024,
            "system_used_percent": sys_mem.percent,
        }

    def get_all_metrics(self) -> Dict:
        return {
            "cpu": self.get_cpu_usage(),
            "memory": self.get_memory_usage(),
        }

    @contextmanager
    def track(self, label: str) -> Iterator[ResourceUsage]:
        """Time a section and record process RSS around it."""
        usage = ResourceUsage(rss_start_mb=self.rss_mb())
        start = time.perf_counter()
        try:
            yield usage
        finally:
            usage.wall_s = time.perf_counter() - start
            usage.rss_end_mb = self.rss_mb()
            logger.debug(
                f"{label}: {usage.wall_s:.2f}s, RSS {usage.rss_start_mb:.1f} -> {usage.rss_end_mb:.1f} MB"
            )
