"""
Problem instances for the vehicle routing problem with soft time windows.

An instance is a depot plus N customers on the plane. Travel time,
distance and cost between two vertices are one and the same number: the
unrounded Euclidean distance between their coordinates. Vertex 0 is the
depot, vertex i is customer i.

Instances are immutable once built and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from vrpstw.errors import InputError
from vrpstw.instances.spec import InstanceSpec


@dataclass(frozen=True)
class Depot:
    """Depot location and the horizon [a0, b0] in which vehicles operate."""

    x: float
    y: float
    a0: float
    b0: float


@dataclass(frozen=True)
class Customer:
    """A customer vertex with its demand, unloading time and soft window."""

    id: int
    x: float
    y: float
    demand: float
    unload: float
    window_lo: float
    window_hi: float
    has_window: bool


@dataclass(frozen=True)
class Instance:
    """
    A complete VRPSTW instance.

    Construction validates the invariants every solver relies on: customer
    ids run 1..N in order, windows are well ordered, unwindowed customers
    carry the depot horizon, and every customer can be served alone.
    """

    name: str
    classification: InstanceSpec
    capacity: float
    depot: Depot
    customers: tuple[Customer, ...]

    def __post_init__(self) -> None:
        if not self.customers:
            raise InputError("An instance needs at least one customer")
        if self.classification.beta != len(self.customers):
            raise InputError(
                f"Classification {self.classification} declares "
                f"{self.classification.beta} customers, found {len(self.customers)}"
            )
        if self.depot.b0 < self.depot.a0:
            raise InputError(
                f"Depot horizon is reversed: [{self.depot.a0}, {self.depot.b0}]"
            )
        for index, customer in enumerate(self.customers, start=1):
            self._check_customer(index, customer)

    def _check_customer(self, index: int, customer: Customer) -> None:
        if customer.id != index:
            raise InputError(f"Customer at position {index} has id {customer.id}")
        if customer.demand < 0:
            raise InputError(f"Customer {customer.id} has negative demand")
        if customer.demand > self.capacity:
            raise InputError(
                f"Customer {customer.id} demand {customer.demand} exceeds "
                f"capacity {self.capacity}"
            )
        if customer.unload < 0:
            raise InputError(f"Customer {customer.id} has negative unloading time")
        if customer.window_hi < customer.window_lo:
            raise InputError(
                f"Customer {customer.id} window is reversed: "
                f"[{customer.window_lo}, {customer.window_hi}]"
            )
        if not customer.has_window and (
            customer.window_lo != self.depot.a0 or customer.window_hi != self.depot.b0
        ):
            raise InputError(
                f"Customer {customer.id} has no window but does not carry the "
                "depot horizon"
            )
        alone = (
            self.depot.a0
            + self.distance[0][customer.id]
            + customer.unload
            + self.distance[customer.id][0]
        )
        if alone > self.depot.b0:
            raise InputError(
                f"Customer {customer.id} cannot be served within the horizon "
                f"(round trip ends at {alone}, horizon closes at {self.depot.b0})"
            )

    @property
    def size(self) -> int:
        """Number of customers N."""
        return len(self.customers)

    @cached_property
    def distance(self) -> list[list[float]]:
        """Full (N+1)x(N+1) Euclidean matrix, depot at index 0."""
        xs = np.array([self.depot.x] + [c.x for c in self.customers], dtype=float)
        ys = np.array([self.depot.y] + [c.y for c in self.customers], dtype=float)
        matrix = np.hypot(xs[:, None] - xs[None, :], ys[:, None] - ys[None, :])
        # plain nested lists: the decoder loops index them per leg
        rows: list[list[float]] = matrix.tolist()
        return rows

    @cached_property
    def demands(self) -> list[float]:
        return [0.0] + [c.demand for c in self.customers]

    @cached_property
    def unloads(self) -> list[float]:
        return [0.0] + [c.unload for c in self.customers]

    @cached_property
    def windows(self) -> list[tuple[float, float]]:
        return [(self.depot.a0, self.depot.b0)] + [
            (c.window_lo, c.window_hi) for c in self.customers
        ]

    def customer(self, customer_id: int) -> Customer:
        """Return the customer with the given id."""
        self.check_id(customer_id)
        return self.customers[customer_id - 1]

    def check_id(self, customer_id: int) -> None:
        """Raise InputError unless customer_id is in 1..N."""
        if not 1 <= customer_id <= len(self.customers):
            raise InputError(
                f"Invalid customer id {customer_id}; expected 1..{len(self.customers)}"
            )
