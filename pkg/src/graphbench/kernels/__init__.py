"""Benchmark kernels: search, spectral, coalesce, metric, optimize."""

from . import coalesce, metric, optimize, search, spectral

__all__ = ["search", "spectral", "coalesce", "metric", "optimize"]
