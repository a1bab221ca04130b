"""Process resource monitoring."""

from .profiler import ResourceMonitor, ResourceUsage

__all__ = [
    'ResourceMonitor',
    'ResourceUsage',
]
