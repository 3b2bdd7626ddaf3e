"""
Approximation-quality measurement against a reference front.

Provides:
- spread_weights, c_dist, d1, d2 and build_reference (quality)
- Front with its file format (fronts)
"""

from vrpstw.metrics.fronts import Front, FrontPoint, read_front, write_front
from vrpstw.metrics.quality import build_reference, c_dist, d1, d2, spread_weights

__all__ = [
    "Front",
    "FrontPoint",
    "build_reference",
    "c_dist",
    "d1",
    "d2",
    "read_front",
    "spread_weights",
    "write_front",
]
