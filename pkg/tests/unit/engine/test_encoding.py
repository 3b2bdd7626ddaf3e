"""
Unit tests for vrpstw/engine/encoding.py
"""

import itertools
import math
import random
from collections import Counter

import pytest

from vrpstw.engine.encoding import (
    check_chromosome,
    decode,
    format_chromosome,
    parse_chromosome,
    random_chromosome,
    split_routes,
)
from vrpstw.errors import InputError, ParseError
from vrpstw.instances.spec import standard_suite
from vrpstw.model.evaluation import evaluate, is_feasible


@pytest.fixture
def capacity_breaks(instance_factory):
    """
    Ten customers stacked on one point next to the depot; demands are chosen
    so that capacity 10 forces route breaks after genes 3 and 7 of
    5 2 1 3 7 9 8 4 6 10.
    """
    demands = {1: 3, 2: 3, 3: 3, 4: 4, 5: 3, 6: 3, 7: 3, 8: 2, 9: 2, 10: 3}
    return instance_factory(
        [(1.0, 0.0)] * 10,
        demands=[float(demands[i]) for i in range(1, 11)],
        capacity=10.0,
    )


class TestSplitRoutes:
    def test_capacity_forces_breaks(self, capacity_breaks):
        chromosome = parse_chromosome("5 2 1 3 7 9 8 4 6 10")
        assert split_routes(capacity_breaks, chromosome) == [
            (5, 2, 1),
            (3, 7, 9, 8),
            (4, 6, 10),
        ]

    def test_everything_fits_in_one_route(self, instance_factory):
        instance = instance_factory(
            [(float(i), 0.0) for i in range(1, 7)], capacity=100.0
        )
        chromosome = (4, 2, 6, 1, 5, 3)
        assert split_routes(instance, chromosome) == [chromosome]

    def test_singletons_when_capacity_equals_demand(self, instance_factory):
        instance = instance_factory(
            [(1.0, 1.0)] * 5, demands=[2.0] * 5, capacity=2.0
        )
        assert split_routes(instance, (3, 1, 5, 2, 4)) == [(3,), (1,), (5,), (2,), (4,)]

    def test_horizon_forces_breaks(self, instance_factory):
        # stacked customers share one round trip of length 10
        instance = instance_factory(
            [(5.0, 0.0), (5.0, 0.0), (5.0, 0.0)],
            horizon=(0.0, 15.0),
        )
        assert split_routes(instance, (2, 3, 1)) == [(2, 3, 1)]
        # each customer alone takes 10, any two together more than 15
        spread = instance_factory(
            [(5.0, 0.0), (-5.0, 0.0), (0.0, 5.0)],
            horizon=(0.0, 15.0),
        )
        assert split_routes(spread, (1, 2, 3)) == [(1,), (2,), (3,)]

    def test_not_a_permutation(self, three_customer_instance):
        with pytest.raises(InputError):
            split_routes(three_customer_instance, (1, 1, 2))
        with pytest.raises(InputError):
            split_routes(three_customer_instance, (1, 2))

    def test_random_pairs_partition_and_are_feasible(self, generated_instance):
        labels = standard_suite()
        rng = random.Random(99)
        for trial in range(1000):
            if trial % 50 == 0:
                label = labels[(trial // 50) % len(labels)]
                instance = generated_instance(label, trial)
            chromosome = random_chromosome(rng, instance.size)
            routes = split_routes(instance, chromosome)
            flattened = [gene for route in routes for gene in route]
            assert flattened == list(chromosome)
            for route in routes:
                assert is_feasible(instance, route)


class TestDecode:
    def test_objectives_match_evaluate(self, three_customer_instance):
        solution = decode(three_customer_instance, (1, 2, 3))
        assert solution.routes == ((1, 2), (3,))
        assert solution.objectives == evaluate(three_customer_instance, solution.routes)
        assert solution.objectives == (34.0, 2, 15.0, 1)

    def test_is_deterministic(self, generated_instance):
        instance = generated_instance("C;20;0.70;60", 1)
        chromosome = random_chromosome(random.Random(5), 20)
        assert decode(instance, chromosome) == decode(instance, chromosome)


class TestRandomChromosome:
    def test_single_customer(self):
        assert random_chromosome(random.Random(0), 1) == (1,)

    def test_fixed_seed_repeats(self):
        assert random_chromosome(random.Random(42), 20) == random_chromosome(
            random.Random(42), 20
        )

    def test_is_a_permutation(self):
        rng = random.Random(7)
        for size in range(1, 30):
            check_chromosome(random_chromosome(rng, size), size)

    def test_size_must_be_positive(self):
        with pytest.raises(InputError):
            random_chromosome(random.Random(0), 0)

    def test_permutations_are_uniform(self):
        rng = random.Random(2024)
        draws = 10_000
        counts = Counter(random_chromosome(rng, 5) for _ in range(draws))
        assert set(counts) == set(itertools.permutations(range(1, 6)))
        p = 1 / 120
        expected = draws * p
        sigma = math.sqrt(draws * p * (1 - p))
        for count in counts.values():
            assert abs(count - expected) <= 5 * sigma


class TestGeneString:
    def test_format(self):
        assert format_chromosome((5, 2, 1, 3)) == "5 2 1 3"

    def test_parse(self):
        assert parse_chromosome(" 5 2  1 3 ") == (5, 2, 1, 3)

    def test_parse_rejects_non_integers(self):
        with pytest.raises(ParseError):
            parse_chromosome("5 two 1")

    def test_parse_rejects_non_permutations(self):
        with pytest.raises(InputError):
            parse_chromosome("1 2 4")
