"""
Steady-state Pareto-rank genetic algorithm.

The population is overlapping: each iteration breeds two children from
roulette-selected parents, and a child only enters the population by
replacing the member with the highest domination count, and only when the
child's own count is strictly lower. Duplicate genotypes and duplicate
decoded solutions are never admitted. Every evaluated child is offered to
an unbounded nondominated archive, which is the run's result.

The run stops after `stagnation_limit` consecutive iterations that admit
no child with a domination count of zero.
"""

from __future__ import annotations

import logging
import math
import random
import time
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any

from vrpstw.engine.encoding import Chromosome, random_chromosome
from vrpstw.engine.evaluator import ArchivingEvaluator
from vrpstw.engine.event_bus import GA_ITERATION, EventBus
from vrpstw.engine.operators import CROSSOVERS, select_parent, swap_mutation
from vrpstw.engine.pareto import (
    F_MAX,
    F_MIN,
    Archive,
    ArchiveEntry,
    dominates,
    fitness_values,
    xi_counts,
)
from vrpstw.engine.run_record import RunRecord
from vrpstw.engine.stagnation import StagnationClock
from vrpstw.errors import ConfigError, RunError
from vrpstw.model.evaluation import ObjectiveVector, Route, Solution
from vrpstw.model.instance import Instance

logger = logging.getLogger(__name__)

# initial population: at most this many draws per slot before giving up
INIT_DRAWS_PER_SLOT = 100


@dataclass(frozen=True)
class GaConfig:
    """
    Parameters of one GA variant.

    The crossover-only variants run with p_mut = 0; the mutation variant
    pairs UOBX with swap mutation at p_mut = 0.1.
    """

    crossover: str = "UOBX"
    pop_size: int = 500
    p_cross: float = 1.0
    p_mut: float = 0.0
    stagnation_limit: int = 10_000
    f_min: float = F_MIN
    f_max: float = F_MAX
    max_iterations: int | None = None

    def __post_init__(self) -> None:
        if self.crossover not in CROSSOVERS:
            raise ConfigError(
                f"Unknown crossover {self.crossover!r}; "
                f"choose from {sorted(CROSSOVERS)}"
            )
        if self.pop_size < 2:
            raise ConfigError(f"pop_size must be >= 2, got {self.pop_size}")
        for name in ("p_cross", "p_mut"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {value}")
        if self.stagnation_limit < 1:
            raise ConfigError(
                f"stagnation_limit must be >= 1, got {self.stagnation_limit}"
            )
        if self.f_max <= self.f_min or self.f_min <= 0:
            raise ConfigError("Fitness bounds need 0 < f_min < f_max")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise ConfigError("max_iterations must be >= 0")

    @property
    def label(self) -> str:
        return f"{self.crossover}+2EX" if self.p_mut > 0 else self.crossover

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(slots=True)
class Member:
    """A population member; xi is kept current as the population changes."""

    chromosome: Chromosome
    solution: Solution
    xi: int = 0

    @property
    def objectives(self) -> ObjectiveVector:
        return self.solution.objectives

    @property
    def key(self) -> tuple[Route, ...]:
        return self.solution.canonical()


class OfferOutcome(Enum):
    DUPLICATE_GENOTYPE = "duplicate_genotype"
    DUPLICATE_SOLUTION = "duplicate_solution"
    REJECTED = "rejected"
    ACCEPTED = "accepted"


@dataclass(frozen=True)
class Offer:
    outcome: OfferOutcome
    xi: int | None = None

    @property
    def accepted(self) -> bool:
        return self.outcome is OfferOutcome.ACCEPTED


class SteadyStateGA:
    """One seeded GA run over one instance."""

    def __init__(
        self,
        instance: Instance,
        config: GaConfig,
        seed: int,
        event_bus: EventBus | None = None,
    ) -> None:
        self.instance = instance
        self.config = config
        self.seed = seed
        self.event_bus = event_bus
        self.rng = random.Random(seed)
        self.crossover = CROSSOVERS[config.crossover]
        self.evaluator = ArchivingEvaluator(instance, event_bus)
        self.population: list[Member] = []
        self.stagnation = StagnationClock(config.stagnation_limit)
        self.iterations = 0
        self._genotypes: set[Chromosome] = set()
        self._solutions: set[tuple[Route, ...]] = set()

    @property
    def archive(self) -> Archive:
        return self.evaluator.archive

    @property
    def evaluations(self) -> int:
        return self.evaluator.evaluations

    def _admit(self, index: int | None, entry: ArchiveEntry, xi: int) -> Member:
        member = Member(entry.chromosome, entry.solution, xi)
        if index is None:
            self.population.append(member)
        else:
            evicted = self.population[index]
            self._genotypes.discard(evicted.chromosome)
            self._solutions.discard(evicted.key)
            self.population[index] = member
        self._genotypes.add(member.chromosome)
        self._solutions.add(member.key)
        return member

    # -----------------------------------------------------------------
    # population
    # -----------------------------------------------------------------

    def initialize(self) -> None:
        """Fill the population with distinct random individuals."""
        pop_size = self.config.pop_size
        size = self.instance.size
        if math.factorial(size) < pop_size:
            raise RunError(
                f"{size} customers admit only {math.factorial(size)} chromosomes; "
                f"pop_size {pop_size} cannot be filled"
            )

        budget = INIT_DRAWS_PER_SLOT * pop_size
        draws = 0
        while len(self.population) < pop_size:
            if draws >= budget:
                raise RunError(
                    f"Could not draw {pop_size} distinct individuals in {budget} "
                    f"attempts; the instance is too small for this population"
                )
            draws += 1
            chromosome = random_chromosome(self.rng, size)
            if chromosome in self._genotypes:
                continue
            entry, _ = self.evaluator(chromosome)
            if entry.key in self._solutions:
                continue
            self._admit(None, entry, 0)

        counts = xi_counts([member.objectives for member in self.population])
        for member, xi in zip(self.population, counts, strict=True):
            member.xi = xi
        logger.debug(
            "Initial population of %d after %d draws, %d nondominated",
            pop_size,
            draws,
            counts.count(0),
        )

    def fitness(self) -> list[float]:
        return fitness_values(
            [member.xi for member in self.population],
            self.config.f_min,
            self.config.f_max,
        )

    def offer(self, chromosome: Chromosome) -> Offer:
        """
        Try to insert a child by replacing the member with the highest
        domination count. Counts of the remaining members are updated
        incrementally for the evicted and the admitted vector.
        """
        if chromosome in self._genotypes:
            return Offer(OfferOutcome.DUPLICATE_GENOTYPE)

        entry, _ = self.evaluator(chromosome)
        if entry.key in self._solutions:
            return Offer(OfferOutcome.DUPLICATE_SOLUTION)

        vector = entry.objectives
        population = self.population
        xi = sum(1 for member in population if dominates(member.objectives, vector))
        worst_index = max(range(len(population)), key=lambda k: population[k].xi)
        evicted = population[worst_index]
        if xi >= evicted.xi:
            return Offer(OfferOutcome.REJECTED, xi)

        # evicted cannot dominate the child: it would give the child xi > evicted.xi
        for index, member in enumerate(population):
            if index == worst_index:
                continue
            if dominates(evicted.objectives, member.objectives):
                member.xi -= 1
            if dominates(vector, member.objectives):
                member.xi += 1

        self._admit(worst_index, entry, xi)
        return Offer(OfferOutcome.ACCEPTED, xi)

    def step(self) -> bool:
        """
        One steady-state iteration. Returns True when a child with a
        domination count of zero was admitted.
        """
        weights = self.fitness()
        first = self.population[select_parent(self.rng, weights)].chromosome
        second = self.population[select_parent(self.rng, weights)].chromosome

        if self.config.p_cross >= 1.0 or self.rng.random() < self.config.p_cross:
            children = self.crossover(self.rng, first, second)
        else:
            children = (first, second)

        improved = False
        for child in children:
            offer = self.offer(swap_mutation(self.rng, child, self.config.p_mut))
            if offer.accepted and offer.xi == 0:
                improved = True

        self.iterations += 1
        if improved:
            self.stagnation.reset()
        else:
            self.stagnation.tick()

        if self.event_bus is not None:
            self.event_bus.publish(
                {
                    "event_type": GA_ITERATION,
                    "iteration": self.iterations,
                    "improved": improved,
                    "stagnant": self.stagnation.now(),
                    "evaluations": self.evaluations,
                    "archive_size": len(self.archive),
                }
            )
        return improved

    def finished(self) -> bool:
        limit = self.config.max_iterations
        if limit is not None and self.iterations >= limit:
            return True
        return self.stagnation.expired

    def run(self, *, instance_name: str | None = None) -> RunRecord:
        started = time.perf_counter()
        logger.info(
            "GA %s on %s (seed %d, pop %d)",
            self.config.label,
            self.instance.name,
            self.seed,
            self.config.pop_size,
        )
        self.initialize()
        while not self.finished():
            self.step()
        elapsed = time.perf_counter() - started

        record = RunRecord.from_archive(
            self.archive,
            instance=instance_name or self.instance.name,
            algorithm=self.config.label,
            seed=self.seed,
            config=self.config.to_dict(),
            evaluations=self.evaluations,
            iterations=self.iterations,
            wall_time=elapsed,
        )
        logger.info(
            "GA %s on %s done: %d evaluations, %d iterations, archive %d, %.0f eval/s",
            self.config.label,
            self.instance.name,
            record.evaluations,
            record.iterations,
            len(record.archive),
            record.evaluations_per_second,
        )
        return record


def ga_run(
    instance: Instance,
    config: GaConfig,
    seed: int,
    event_bus: EventBus | None = None,
) -> RunRecord:
    """Run the steady-state GA to termination and return its record."""
    return SteadyStateGA(instance, config, seed, event_bus).run()
