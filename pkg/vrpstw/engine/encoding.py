"""
Giant-tour encoding.

A chromosome is a permutation of the customer ids 1..N. The decoder walks
it left to right and keeps appending customers to the current route while
the extended route still returns to the depot by b0 and stays within the
vehicle capacity; otherwise it closes the route and opens a new one.

Many chromosomes decode to the same route set.
"""

from __future__ import annotations

import random
from collections.abc import Sequence

from vrpstw.errors import InputError, ParseError
from vrpstw.model.evaluation import Route, Solution, evaluate_routes
from vrpstw.model.instance import Instance

Chromosome = tuple[int, ...]


def check_chromosome(genes: Sequence[int], size: int) -> None:
    """Raise InputError unless genes is a permutation of 1..size."""
    if len(genes) != size or set(genes) != set(range(1, size + 1)):
        raise InputError(f"Not a permutation of 1..{size}: {list(genes)}")


def random_chromosome(rng: random.Random, size: int) -> Chromosome:
    """Uniformly random permutation of 1..size drawn from rng."""
    if size < 1:
        raise InputError(f"Chromosome length must be >= 1, got {size}")
    genes = list(range(1, size + 1))
    rng.shuffle(genes)
    return tuple(genes)


def split_routes(instance: Instance, chromosome: Sequence[int]) -> list[Route]:
    """Greedy feasibility-preserving partition of a chromosome into routes."""
    check_chromosome(chromosome, instance.size)

    dist = instance.distance
    unload = instance.unloads
    demand = instance.demands
    a0 = instance.depot.a0
    b0 = instance.depot.b0
    capacity = instance.capacity

    routes: list[Route] = []
    first = chromosome[0]
    current = [first]
    arrival = a0 + dist[0][first]
    load = demand[first]

    for customer in chromosome[1:]:
        last = current[-1]
        next_arrival = arrival + unload[last] + dist[last][customer]
        closing_time = next_arrival + unload[customer] + dist[customer][0]
        next_load = load + demand[customer]
        if closing_time <= b0 and next_load <= capacity:
            current.append(customer)
            arrival = next_arrival
            load = next_load
        else:
            routes.append(tuple(current))
            current = [customer]
            arrival = a0 + dist[0][customer]
            load = demand[customer]

    routes.append(tuple(current))
    return routes


def decode(instance: Instance, chromosome: Sequence[int]) -> Solution:
    """Decode a chromosome into an evaluated Solution."""
    routes = tuple(split_routes(instance, chromosome))
    return Solution(routes=routes, objectives=evaluate_routes(instance, routes))


def format_chromosome(chromosome: Sequence[int]) -> str:
    """Space-separated gene string, e.g. "5 2 1 3"."""
    return " ".join(str(gene) for gene in chromosome)


def parse_chromosome(text: str) -> Chromosome:
    """Inverse of format_chromosome."""
    try:
        genes = tuple(int(token) for token in text.split())
    except ValueError:
        raise ParseError(f"not a gene string: {text!r}") from None
    check_chromosome(genes, len(genes))
    return genes
