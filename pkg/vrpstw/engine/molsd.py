"""
Multiple-objective local search descent (MOLSD).

Starting from one random chromosome, MOLSD repeatedly picks a not yet
investigated member of its nondominated archive at random, evaluates the
member's whole substring-reversal neighbourhood and offers every neighbour
to the archive. The search ends once every current archive member has had
its neighbourhood investigated; the archive is then locally optimal with
respect to that neighbourhood.

Investigated flags belong to chromosomes. A member evicted by a
dominating neighbour loses its flag.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Iterator, Sequence

from vrpstw.engine.encoding import Chromosome, random_chromosome
from vrpstw.engine.evaluator import ArchivingEvaluator
from vrpstw.engine.event_bus import MOLSD_EXPANSION, EventBus
from vrpstw.engine.pareto import Archive
from vrpstw.engine.run_record import RunRecord
from vrpstw.model.instance import Instance

logger = logging.getLogger(__name__)

ALGORITHM = "MOLSD"


def neighborhood_size(size: int) -> int:
    """N(N-1)/2 reversals for a chromosome of length N."""
    return size * (size - 1) // 2


def reversal_neighborhood(chromosome: Sequence[int]) -> Iterator[Chromosome]:
    """
    Every chromosome obtained by reversing one substring c[i..j], i < j,
    in lexicographic (i, j) order.
    """
    genes = tuple(chromosome)
    size = len(genes)
    for i in range(size - 1):
        for j in range(i + 1, size):
            yield genes[:i] + genes[i : j + 1][::-1] + genes[j + 1 :]


class MultiObjectiveLocalSearch:
    """One seeded MOLSD run over one instance."""

    def __init__(
        self, instance: Instance, seed: int, event_bus: EventBus | None = None
    ) -> None:
        self.instance = instance
        self.seed = seed
        self.event_bus = event_bus
        self.rng = random.Random(seed)
        self.evaluator = ArchivingEvaluator(instance, event_bus)
        self.investigated: set[Chromosome] = set()
        self.expansions = 0

    @property
    def archive(self) -> Archive:
        return self.evaluator.archive

    def expand(self) -> bool:
        """
        Investigate one randomly chosen pending member. Returns False when
        no member is pending.
        """
        pending = [
            entry
            for entry in self.archive
            if entry.chromosome not in self.investigated
        ]
        if not pending:
            return False

        current = self.rng.choice(pending)
        accepted = 0
        for neighbor in reversal_neighborhood(current.chromosome):
            _, result = self.evaluator(neighbor)
            if result.accepted:
                accepted += 1
                for evicted in result.removed:
                    self.investigated.discard(evicted.chromosome)

        if self.archive.is_member(current):
            self.investigated.add(current.chromosome)
        self.expansions += 1

        if self.event_bus is not None:
            self.event_bus.publish(
                {
                    "event_type": MOLSD_EXPANSION,
                    "expansion": self.expansions,
                    "chromosome": current.chromosome,
                    "accepted": accepted,
                    "pending": len(pending) - 1,
                    "archive_size": len(self.archive),
                    "evaluations": self.evaluator.evaluations,
                }
            )
        logger.debug(
            "Expansion %d: %d neighbours accepted, archive %d",
            self.expansions,
            accepted,
            len(self.archive),
        )
        return True

    def run(self, *, instance_name: str | None = None) -> RunRecord:
        started = time.perf_counter()
        logger.info("MOLSD on %s (seed %d)", self.instance.name, self.seed)

        # same draw as the GA's initial individuals
        self.evaluator(random_chromosome(self.rng, self.instance.size))
        while self.expand():
            pass
        elapsed = time.perf_counter() - started

        record = RunRecord.from_archive(
            self.archive,
            instance=instance_name or self.instance.name,
            algorithm=ALGORITHM,
            seed=self.seed,
            config={"neighborhood": "reversal"},
            evaluations=self.evaluator.evaluations,
            iterations=self.expansions,
            wall_time=elapsed,
        )
        logger.info(
            "MOLSD on %s done: %d evaluations, %d expansions, archive %d, %.0f eval/s",
            self.instance.name,
            record.evaluations,
            record.iterations,
            len(record.archive),
            record.evaluations_per_second,
        )
        return record


def molsd_run(
    instance: Instance, seed: int, event_bus: EventBus | None = None
) -> RunRecord:
    """Run MOLSD to termination and return its record."""
    return MultiObjectiveLocalSearch(instance, seed, event_bus).run()
