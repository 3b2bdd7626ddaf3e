"""
Unit tests for vrpstw/model/instance.py
"""

import math

import pytest

from vrpstw.errors import InputError
from vrpstw.instances.spec import InstanceSpec
from vrpstw.model.instance import Customer, Depot, Instance


def _customer(**overrides):
    fields = dict(
        id=1,
        x=3.0,
        y=4.0,
        demand=5.0,
        unload=1.0,
        window_lo=0.0,
        window_hi=100.0,
        has_window=False,
    )
    fields.update(overrides)
    return Customer(**fields)


def _instance(*customers, capacity=10.0, horizon=(0.0, 100.0)):
    return Instance(
        name="t",
        classification=InstanceSpec("R", len(customers), 0.0, 0.0),
        capacity=capacity,
        depot=Depot(0.0, 0.0, *horizon),
        customers=tuple(customers),
    )


class TestInstanceValidation:
    def test_valid_instance(self):
        instance = _instance(_customer())
        assert instance.size == 1
        assert instance.customer(1).demand == 5.0

    def test_requires_customers(self):
        with pytest.raises(InputError):
            _instance()

    def test_ids_must_run_from_one(self):
        with pytest.raises(InputError, match="position 1 has id 2"):
            _instance(_customer(id=2))

    def test_demand_above_capacity(self):
        with pytest.raises(InputError, match="exceeds capacity"):
            _instance(_customer(demand=11.0))

    def test_demand_equal_to_capacity_is_allowed(self):
        assert _instance(_customer(demand=10.0)).size == 1

    def test_negative_unload(self):
        with pytest.raises(InputError):
            _instance(_customer(unload=-1.0))

    def test_reversed_window(self):
        with pytest.raises(InputError, match="reversed"):
            _instance(_customer(window_lo=50.0, window_hi=40.0, has_window=True))

    def test_unwindowed_customer_must_carry_horizon(self):
        with pytest.raises(InputError, match="depot horizon"):
            _instance(_customer(window_lo=10.0, window_hi=20.0, has_window=False))

    def test_customer_unservable_alone(self):
        # round trip 5 + 1 + 5 = 11 > 10
        with pytest.raises(InputError, match="cannot be served"):
            _instance(_customer(window_hi=10.0), horizon=(0.0, 10.0))

    def test_reversed_horizon(self):
        with pytest.raises(InputError):
            _instance(_customer(), horizon=(10.0, 5.0))

    def test_customer_count_must_match_classification(self):
        with pytest.raises(InputError, match="declares 30 customers, found 1"):
            Instance(
                name="t",
                classification=InstanceSpec("R", 30, 0.0, 0.0),
                capacity=10.0,
                depot=Depot(0.0, 0.0, 0.0, 100.0),
                customers=(_customer(),),
            )


class TestInstanceTables:
    def test_distance_is_euclidean_with_depot_at_zero(self, three_customer_instance):
        dist = three_customer_instance.distance
        assert dist[0][1] == 5.0
        assert dist[0][2] == 10.0
        assert dist[1][2] == 5.0
        assert dist[1][3] == pytest.approx(math.sqrt(10))
        assert dist[2][2] == 0.0

    def test_distance_is_symmetric(self, generated_instance):
        instance = generated_instance("R;12;0.50;30", 3)
        n = instance.size
        for i in range(n + 1):
            for j in range(n + 1):
                assert instance.distance[i][j] == instance.distance[j][i]

    def test_per_vertex_tables(self, three_customer_instance):
        assert three_customer_instance.demands == [0.0, 4.0, 4.0, 4.0]
        assert three_customer_instance.unloads == [0.0, 1.0, 1.0, 2.0]
        assert three_customer_instance.windows[3] == (20.0, 30.0)
        assert three_customer_instance.windows[2] == (0.0, 100.0)

    @pytest.mark.parametrize("bad_id", [0, 4, -1])
    def test_check_id_rejects_unknown_ids(self, three_customer_instance, bad_id):
        with pytest.raises(InputError):
            three_customer_instance.check_id(bad_id)
