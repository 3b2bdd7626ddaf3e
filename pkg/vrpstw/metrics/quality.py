"""
Distance of an approximation front to a reference front.

c(x, y) = max(0, max_j w_j (g_j(x) - g_j(y))) is the weighted achievement
distance from a reference point y to an approximation point x. d1 averages
and d2 maximises, over the reference points, the distance to the closest
approximation point. Weights are 1 / spread of each objective over the
reference front; an objective that is constant on the reference gets
weight 0.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np

from vrpstw.engine.pareto import Vector
from vrpstw.errors import InputError
from vrpstw.metrics.fronts import Front

Weights = tuple[float, ...]
FrontLike = Front | Sequence[Vector]


def _as_array(front: FrontLike, what: str) -> np.ndarray:
    vectors = front.vectors() if isinstance(front, Front) else list(front)
    if not vectors:
        raise InputError(f"{what} front is empty")
    return np.asarray(vectors, dtype=float)


def spread_weights(ref: FrontLike) -> Weights:
    """w_j = 1 / (max_j - min_j) over the reference, 0 where the spread is 0."""
    values = _as_array(ref, "reference")
    spread = np.ptp(values, axis=0)
    safe = np.where(spread > 0, spread, 1.0)
    weights = np.where(spread > 0, 1.0 / safe, 0.0)
    return tuple(float(w) for w in weights)


def c_dist(x: Vector, y: Vector, weights: Sequence[float]) -> float:
    """Weighted achievement distance of x from y; 0 when x dominates or equals y."""
    return max(
        0.0, *(w * (xj - yj) for w, xj, yj in zip(weights, x, y, strict=True))
    )


def closest_distances(
    approx: FrontLike, ref: FrontLike, weights: Sequence[float] | None = None
) -> np.ndarray:
    """For every reference point, c to the nearest approximation point."""
    reference = _as_array(ref, "reference")
    approximation = _as_array(approx, "approximation")
    w = np.asarray(spread_weights(ref) if weights is None else weights, dtype=float)
    # [i, k, j]: objective j of approximation point k against reference point i
    scaled = (approximation[None, :, :] - reference[:, None, :]) * w
    distances = np.maximum(scaled.max(axis=2), 0.0)
    closest: np.ndarray = distances.min(axis=1)
    return closest


def average_and_worst(
    approx: FrontLike, ref: FrontLike, weights: Sequence[float] | None = None
) -> tuple[float, float]:
    """
    (d1, d2) from one pass over the closest distances.

    The mean is summed with math.fsum and capped at the worst distance, so
    d1 <= d2 holds exactly even when every distance is the same.
    """
    closest = [float(c) for c in closest_distances(approx, ref, weights)]
    worst = max(closest)
    return min(math.fsum(closest) / len(closest), worst), worst


def d1(
    approx: FrontLike, ref: FrontLike, weights: Sequence[float] | None = None
) -> float:
    """Average distance from the reference to the approximation."""
    return average_and_worst(approx, ref, weights)[0]


def d2(
    approx: FrontLike, ref: FrontLike, weights: Sequence[float] | None = None
) -> float:
    """Worst-case distance from the reference to the approximation."""
    return average_and_worst(approx, ref, weights)[1]


def build_reference(fronts: Iterable[FrontLike]) -> Front:
    """
    Nondominated union of all fronts, exact duplicates collapsed.

    Raises:
        InputError: if every input front is empty.
    """
    union: list[Front] = []
    for front in fronts:
        union.append(front if isinstance(front, Front) else Front.from_vectors(front))
    merged = Front.union(union)
    if not merged.points:
        raise InputError("Cannot build a reference from empty fronts only")
    return merged.nondominated()
