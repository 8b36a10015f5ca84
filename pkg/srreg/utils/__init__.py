"""Utility modules for srreg."""

from .power_cache import power_cache
from .runner import ParallelRunner

__all__ = ["power_cache", "ParallelRunner"]
