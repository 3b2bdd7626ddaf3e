"""
Integration tests for EventBus with the solvers.
Tests how observers on the bus see real GA and MOLSD runs.
"""

from collections import Counter

import pytest

from vrpstw.engine.event_bus import (
    ARCHIVE_ACCEPTED,
    EVALUATION,
    GA_ITERATION,
    MOLSD_EXPANSION,
    EventBus,
    ReplayLog,
)
from vrpstw.engine.genetic import GaConfig, SteadyStateGA
from vrpstw.engine.molsd import MultiObjectiveLocalSearch
from vrpstw.errors import RunError


class ArchiveMonitor:
    """Rebuilds the archive size from acceptance events alone."""

    def __init__(self):
        self.size = 0
        self.sizes = []

    def __call__(self, event):
        if event["event_type"] == ARCHIVE_ACCEPTED:
            self.size = self.size - event["removed"] + 1
            self.sizes.append(event["archive_size"])


class RateCounter:
    def __init__(self):
        self.counts = Counter()

    def __call__(self, event):
        self.counts[event["event_type"]] += 1


@pytest.fixture
def instance(generated_instance):
    return generated_instance("C;10;0.70;60", seed=8)


class TestEventBusWithGa:
    def test_observers_agree_with_the_run(self, instance):
        bus = EventBus()
        log = ReplayLog()
        monitor = ArchiveMonitor()
        counter = RateCounter()
        for subscriber in (log, monitor, counter):
            bus.subscribe(subscriber)

        config = GaConfig(crossover="UOBX", pop_size=10, p_mut=0.1, stagnation_limit=15)
        record = SteadyStateGA(instance, config, seed=4, event_bus=bus).run()

        assert counter.counts[EVALUATION] == record.evaluations
        assert counter.counts[GA_ITERATION] == record.iterations
        assert monitor.size == len(record.archive)
        assert monitor.sizes == [
            event["archive_size"] for event in log.of_type(ARCHIVE_ACCEPTED)
        ]

        iterations = log.of_type(GA_ITERATION)
        assert [event["iteration"] for event in iterations] == list(
            range(1, record.iterations + 1)
        )
        assert iterations[-1]["stagnant"] == config.stagnation_limit

    def test_evaluations_are_numbered_in_order(self, instance):
        bus = EventBus()
        log = ReplayLog()
        bus.subscribe(log)
        config = GaConfig(crossover="PMX", pop_size=8, stagnation_limit=5)
        SteadyStateGA(instance, config, seed=1, event_bus=bus).run()

        numbers = [event["evaluation"] for event in log.of_type(EVALUATION)]
        assert numbers == list(range(1, len(numbers) + 1))

    def test_failing_subscriber_aborts_the_run(self, instance):
        bus = EventBus()

        def explode(event):
            if event["event_type"] == GA_ITERATION:
                raise RuntimeError("observer failed")

        bus.subscribe(explode)
        config = GaConfig(pop_size=8, stagnation_limit=5)
        with pytest.raises(RuntimeError, match="observer failed"):
            SteadyStateGA(instance, config, seed=1, event_bus=bus).run()

    def test_closed_bus_stops_the_run(self, instance):
        bus = EventBus()
        bus.close()
        config = GaConfig(pop_size=8, stagnation_limit=5)
        with pytest.raises(RunError, match="Progress bus is closed"):
            SteadyStateGA(instance, config, seed=1, event_bus=bus).run()


class TestEventBusWithMolsd:
    def test_expansions_and_acceptances(self, instance):
        bus = EventBus()
        log = ReplayLog()
        monitor = ArchiveMonitor()
        bus.subscribe(log)
        bus.subscribe(monitor)

        search = MultiObjectiveLocalSearch(instance, seed=6, event_bus=bus)
        record = search.run()

        expansions = log.of_type(MOLSD_EXPANSION)
        assert len(expansions) == record.iterations
        assert sum(event["accepted"] for event in expansions) + 1 == len(
            log.of_type(ARCHIVE_ACCEPTED)
        )
        assert len(log.of_type(EVALUATION)) == record.evaluations
        assert monitor.size == len(record.archive)

    def test_one_bus_observes_two_runs(self, instance):
        bus = EventBus()
        counter = RateCounter()
        bus.subscribe(counter)

        first = MultiObjectiveLocalSearch(instance, seed=1, event_bus=bus).run()
        second = MultiObjectiveLocalSearch(instance, seed=2, event_bus=bus).run()

        assert counter.counts[EVALUATION] == first.evaluations + second.evaluations
