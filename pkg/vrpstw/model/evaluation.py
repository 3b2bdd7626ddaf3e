"""
Route arithmetic and the four objectives of the VRPSTW.

Vehicles leave the depot at a0 and serve each customer on arrival; an early
arrival is never converted into waiting time, it is counted as a window
violation instead. All times are accumulated through the same arrival
recurrence so that the decoder's feasibility test, `route_time` and
`arrival_times` agree bit for bit.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

from vrpstw.errors import InputError
from vrpstw.model.instance import Instance

Route = tuple[int, ...]


class ObjectiveVector(NamedTuple):
    """
    G(R) = (g1, g2, g3, g4), all minimised.

    g1: total route time, g2: number of routes, g3: total window
    violation in time units, g4: number of violated windows.
    """

    g1: float
    g2: int
    g3: float
    g4: int


@dataclass(frozen=True)
class Solution:
    """An ordered set of routes together with its objective vector."""

    routes: tuple[Route, ...]
    objectives: ObjectiveVector

    def canonical(self) -> tuple[Route, ...]:
        """
        Order-independent identity of the route set.

        Routes are open paths, so each keeps its direction; only the order
        of the routes is normalised (sorted by first customer id).
        """
        return tuple(sorted(self.routes))


def _check_route(instance: Instance, route: Sequence[int]) -> None:
    if not route:
        raise InputError("A route must visit at least one customer")
    for customer_id in route:
        instance.check_id(customer_id)


def arrival_times(instance: Instance, route: Sequence[int]) -> list[float]:
    """Arrival time at every customer of the route, in visiting order."""
    _check_route(instance, route)
    dist = instance.distance
    unload = instance.unloads
    arrival = instance.depot.a0 + dist[0][route[0]]
    times = [arrival]
    for prev, nxt in zip(route, route[1:], strict=False):
        arrival = arrival + unload[prev] + dist[prev][nxt]
        times.append(arrival)
    return times


def route_time(instance: Instance, route: Sequence[int]) -> float:
    """
    Time t(r) to travel a route: departure at a0, every leg, every unloading
    and the return leg to the depot.
    """
    last_arrival = arrival_times(instance, route)[-1]
    last = route[-1]
    return last_arrival + instance.unloads[last] + instance.distance[last][0]


def route_load(instance: Instance, route: Sequence[int]) -> float:
    """Sum of the demands of the customers on the route."""
    _check_route(instance, route)
    demands = instance.demands
    return sum(demands[customer_id] for customer_id in route)


def window_violation(
    instance: Instance, customer_id: int, arrival: float
) -> tuple[float, int]:
    """
    Violation w of the customer's window at the given arrival time and the
    flag u that is 1 exactly when w > 0.
    """
    instance.check_id(customer_id)
    lo, hi = instance.windows[customer_id]
    violation = max(0.0, lo - arrival, arrival - hi)
    return violation, 1 if violation > 0 else 0


def is_feasible(instance: Instance, route: Sequence[int]) -> bool:
    """True iff the route returns by b0 and carries at most the capacity."""
    return (
        route_time(instance, route) <= instance.depot.b0
        and route_load(instance, route) <= instance.capacity
    )


def evaluate_routes(instance: Instance, routes: Sequence[Route]) -> ObjectiveVector:
    """
    Objective vector of a route set that is already known to be a valid
    partition. Used by the decoder; `evaluate` is the checked entry point.

    Per-route totals are combined with a correctly rounded sum, so every
    ordering of the same routes yields the same vector.
    """
    dist = instance.distance
    unload = instance.unloads
    windows = instance.windows
    a0 = instance.depot.a0

    times: list[float] = []
    violations: list[float] = []
    violated = 0
    for route in routes:
        prev = route[0]
        arrival = a0 + dist[0][prev]
        lo, hi = windows[prev]
        route_violation = 0.0
        w = max(0.0, lo - arrival, arrival - hi)
        if w > 0:
            route_violation += w
            violated += 1
        for nxt in route[1:]:
            arrival = arrival + unload[prev] + dist[prev][nxt]
            lo, hi = windows[nxt]
            w = max(0.0, lo - arrival, arrival - hi)
            if w > 0:
                route_violation += w
                violated += 1
            prev = nxt
        times.append(arrival + unload[prev] + dist[prev][0])
        violations.append(route_violation)

    return ObjectiveVector(
        math.fsum(times), len(routes), math.fsum(violations), violated
    )


def check_partition(instance: Instance, routes: Sequence[Sequence[int]]) -> None:
    """Raise InputError unless the routes partition the customers 1..N."""
    seen: set[int] = set()
    for route in routes:
        _check_route(instance, route)
        for customer_id in route:
            if customer_id in seen:
                raise InputError(f"Customer {customer_id} is visited more than once")
            seen.add(customer_id)
    if len(seen) != instance.size:
        missing = sorted(set(range(1, instance.size + 1)) - seen)
        raise InputError(f"Customers not visited by any route: {missing}")


def evaluate(
    instance: Instance, routes: Solution | Sequence[Sequence[int]]
) -> ObjectiveVector:
    """
    Evaluate g1..g4 for a route set, or for the routes of a Solution.

    Raises:
        InputError: if the routes do not partition the customers.
    """
    if isinstance(routes, Solution):
        routes = routes.routes
    check_partition(instance, routes)
    return evaluate_routes(instance, [tuple(route) for route in routes])


def make_solution(instance: Instance, routes: Sequence[Sequence[int]]) -> Solution:
    """Build an evaluated Solution from plain route sequences."""
    frozen = tuple(tuple(route) for route in routes)
    return Solution(routes=frozen, objectives=evaluate(instance, frozen))
