"""Test configuration and fixtures."""

import random
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from vrpstw.instances.generator import GeneratorParams, generate  # noqa: E402
from vrpstw.instances.spec import InstanceSpec, parse_spec  # noqa: E402
from vrpstw.model.instance import Customer, Depot, Instance  # noqa: E402

InstanceFactory = Callable[..., Instance]


def _build_instance(
    points: Sequence[tuple[float, float]],
    *,
    demands: Sequence[float] | None = None,
    unloads: Sequence[float] | None = None,
    windows: dict[int, tuple[float, float]] | None = None,
    capacity: float = 100.0,
    depot: tuple[float, float] = (0.0, 0.0),
    horizon: tuple[float, float] = (0.0, 1000.0),
    name: str = "fixture",
) -> Instance:
    a0, b0 = horizon
    windows = windows or {}
    customers = []
    for index, (x, y) in enumerate(points, start=1):
        lo, hi = windows.get(index, (a0, b0))
        customers.append(
            Customer(
                id=index,
                x=x,
                y=y,
                demand=demands[index - 1] if demands is not None else 1.0,
                unload=unloads[index - 1] if unloads is not None else 0.0,
                window_lo=lo,
                window_hi=hi,
                has_window=index in windows,
            )
        )
    return Instance(
        name=name,
        classification=InstanceSpec("R", len(points), 0.0, 0.0),
        capacity=capacity,
        depot=Depot(x=depot[0], y=depot[1], a0=a0, b0=b0),
        customers=tuple(customers),
    )


@pytest.fixture
def instance_factory() -> InstanceFactory:
    """Build a small hand-made instance from customer coordinates."""
    return _build_instance


@pytest.fixture
def three_customer_instance() -> Instance:
    """
    Depot at the origin, horizon [0, 100], capacity 10.

    Customer 1 at (3, 4): demand 4, unload 1, window [0, 10]
    Customer 2 at (6, 8): demand 4, unload 1, no window
    Customer 3 at (0, 5): demand 4, unload 2, window [20, 30]

    Every depot leg and the 1-2 leg are exact integers (5 or 10).
    """
    return _build_instance(
        [(3.0, 4.0), (6.0, 8.0), (0.0, 5.0)],
        demands=[4.0, 4.0, 4.0],
        unloads=[1.0, 1.0, 2.0],
        windows={1: (0.0, 10.0), 3: (20.0, 30.0)},
        capacity=10.0,
        horizon=(0.0, 100.0),
        name="three",
    )


@pytest.fixture
def generated_instance() -> Callable[[str, int], Instance]:
    """Generate an instance from a spec string and a seed."""

    def make(label: str, seed: int = 0) -> Instance:
        return generate(parse_spec(label), GeneratorParams(), random.Random(seed))

    return make


@pytest.fixture
def seven_customer_instance() -> Instance:
    """Generated N = 7 instance small enough for exhaustive enumeration."""
    return generate(
        parse_spec("R;7;0.45;30"),
        GeneratorParams(capacity=40.0),
        random.Random(2024),
    )
