"""
Seeded generator for α;β;γ;δ test instances.

Customers are scattered uniformly over a square plane (α = R) or drawn
around a handful of cluster centres (α = C). Exactly round(γ·β) customers,
chosen at random, get a window of width δ placed uniformly inside the
depot horizon, its start on a quarter-unit grid; the rest carry the
horizon itself, so their window never binds. The depot sits at the centre
of the plane.

Generation is deterministic given the rng state.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from vrpstw.errors import GenerationError, InputError
from vrpstw.instances.spec import InstanceSpec
from vrpstw.model.instance import Customer, Depot, Instance

# window starts lie on this grid, counted from the horizon start
WINDOW_STEP = 0.25


@dataclass(frozen=True)
class GeneratorParams:
    """
    Physical parameters shared by every generated instance.

    Defaults give 20-customer instances that need four to six vehicles and
    a horizon wide enough for the largest windows of the standard suite.
    """

    plane_size: float = 100.0
    demand_min: int = 5
    demand_max: int = 25
    unload: float = 10.0
    capacity: float = 100.0
    horizon_start: float = 0.0
    horizon_end: float = 480.0
    cluster_spread: float = 8.0
    clusters: int | None = None

    def __post_init__(self) -> None:
        if self.plane_size <= 0:
            raise GenerationError("plane_size must be positive")
        if not 0 <= self.demand_min <= self.demand_max:
            raise GenerationError("Need 0 <= demand_min <= demand_max")
        if self.demand_max > self.capacity:
            raise GenerationError(
                f"demand_max {self.demand_max} exceeds capacity {self.capacity}"
            )
        if self.unload < 0:
            raise GenerationError("unload must be >= 0")
        if self.horizon_end < self.horizon_start:
            raise GenerationError("Horizon end precedes its start")
        if self.cluster_spread < 0:
            raise GenerationError("cluster_spread must be >= 0")
        if self.clusters is not None and self.clusters < 1:
            raise GenerationError("clusters must be >= 1")

    def cluster_count(self, beta: int) -> int:
        return self.clusters if self.clusters is not None else max(2, beta // 10)


def generate(
    spec: InstanceSpec,
    params: GeneratorParams,
    rng: random.Random,
    name: str | None = None,
) -> Instance:
    """
    Build one instance of the given classification.

    Raises:
        GenerationError: if δ exceeds the horizon or a customer could not
            be served within it.
    """
    a0, b0 = params.horizon_start, params.horizon_end
    if spec.delta > b0 - a0:
        raise GenerationError(
            f"Window size {spec.delta:g} exceeds the horizon [{a0:g}, {b0:g}]"
        )

    if spec.alpha == "R":
        coordinates = _uniform_coordinates(rng, spec.beta, params)
    else:
        coordinates = _clustered_coordinates(rng, spec.beta, params)

    demands = [
        float(rng.randint(params.demand_min, params.demand_max))
        for _ in range(spec.beta)
    ]
    windowed = set(rng.sample(range(1, spec.beta + 1), spec.windowed_count))

    customers: list[Customer] = []
    for customer_id, ((x, y), demand) in enumerate(
        zip(coordinates, demands, strict=True), start=1
    ):
        if customer_id in windowed:
            steps = math.floor((b0 - spec.delta - a0) / WINDOW_STEP)
            lo = min(a0 + WINDOW_STEP * rng.randint(0, steps), b0 - spec.delta)
            hi = lo + spec.delta
        else:
            lo, hi = a0, b0
        customers.append(
            Customer(
                id=customer_id,
                x=x,
                y=y,
                demand=demand,
                unload=params.unload,
                window_lo=lo,
                window_hi=hi,
                has_window=customer_id in windowed,
            )
        )

    centre = params.plane_size / 2
    try:
        return Instance(
            name=name or spec.slug,
            classification=spec,
            capacity=float(params.capacity),
            depot=Depot(x=centre, y=centre, a0=a0, b0=b0),
            customers=tuple(customers),
        )
    except InputError as exc:
        raise GenerationError(f"Generated instance is invalid: {exc}") from None


def _clip(value: float, upper: float) -> float:
    return min(max(value, 0.0), upper)


def _uniform_coordinates(
    rng: random.Random, count: int, params: GeneratorParams
) -> list[tuple[float, float]]:
    size = params.plane_size
    return [
        (round(rng.uniform(0, size), 2), round(rng.uniform(0, size), 2))
        for _ in range(count)
    ]


def _clustered_coordinates(
    rng: random.Random, count: int, params: GeneratorParams
) -> list[tuple[float, float]]:
    size = params.plane_size
    centres = [
        (rng.uniform(0, size), rng.uniform(0, size))
        for _ in range(params.cluster_count(count))
    ]
    coordinates: list[tuple[float, float]] = []
    for index in range(count):
        cx, cy = centres[index % len(centres)]
        x = _clip(rng.gauss(cx, params.cluster_spread), size)
        y = _clip(rng.gauss(cy, params.cluster_spread), size)
        coordinates.append((round(x, 2), round(y, 2)))
    return coordinates
