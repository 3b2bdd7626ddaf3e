"""
Pareto dominance, domination counts, rank-based fitness and the
nondominated archive.

All objectives are minimised. A vector dominates another when it is no
worse in every component and strictly better in at least one; equal
vectors do not dominate each other.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from vrpstw.engine.encoding import Chromosome, format_chromosome
from vrpstw.errors import InputError
from vrpstw.model.evaluation import ObjectiveVector, Route, Solution

F_MIN = 1.0
F_MAX = 100.0

Vector = Sequence[float]


def dominates(a: Vector, b: Vector) -> bool:
    """True iff a dominates b."""
    strictly_better = False
    for x, y in zip(a, b, strict=True):
        if x > y:
            return False
        if x < y:
            strictly_better = True
    return strictly_better


def xi_counts(vectors: Sequence[Vector]) -> list[int]:
    """
    For every vector, the number of vectors in the list that dominate it.

    Nondominated members get 0. Vectorised over all pairs.
    """
    if len(vectors) == 0:
        raise InputError("Cannot count dominance in an empty population")
    values = np.asarray(vectors, dtype=float)
    no_worse = (values[:, None, :] <= values[None, :, :]).all(axis=2)
    better = (values[:, None, :] < values[None, :, :]).any(axis=2)
    # [i, j] is True when vector i dominates vector j
    dominance = no_worse & better
    counts: list[int] = dominance.sum(axis=0).astype(int).tolist()
    return counts


def fitness(
    xi: int, xi_max: int, f_min: float = F_MIN, f_max: float = F_MAX
) -> float:
    """
    Linear map of a domination count onto [f_min, f_max].

    xi = 0 maps to f_max and xi = xi_max maps to f_min. A population whose
    members are all mutually nondominated (xi_max = 0) gets f_max throughout.
    """
    if f_max <= f_min:
        raise InputError(f"f_max ({f_max}) must exceed f_min ({f_min})")
    if not 0 <= xi <= xi_max:
        raise InputError(f"xi={xi} outside [0, {xi_max}]")
    if xi_max == 0:
        return f_max
    return f_max - xi * (f_max - f_min) / xi_max


def fitness_values(
    xis: Sequence[int], f_min: float = F_MIN, f_max: float = F_MAX
) -> list[float]:
    """Fitness of every member of a population given its domination counts."""
    xi_max = max(xis)
    return [fitness(xi, xi_max, f_min, f_max) for xi in xis]


def nondominated_filter(vectors: Iterable[Vector]) -> list[tuple[float, ...]]:
    """
    Mutually nondominated subset of the vectors, exact duplicates collapsed,
    in order of first appearance.
    """
    front: list[tuple[float, ...]] = []
    for vector in dict.fromkeys(tuple(v) for v in vectors):
        if any(dominates(member, vector) for member in front):
            continue
        front = [member for member in front if not dominates(vector, member)]
        front.append(vector)
    return front


@dataclass(frozen=True)
class ArchiveEntry:
    """A chromosome with its decoded, evaluated solution."""

    chromosome: Chromosome
    solution: Solution

    @property
    def objectives(self) -> ObjectiveVector:
        return self.solution.objectives

    @cached_property
    def key(self) -> tuple[Route, ...]:
        """Canonical solution used for duplicate detection."""
        return self.solution.canonical()


class InsertOutcome(Enum):
    ACCEPTED = "accepted"
    DOMINATED = "dominated"
    DUPLICATE = "duplicate"


@dataclass(frozen=True)
class InsertResult:
    """
    What happened to an entry offered to the archive.

    `existing` is the dominating member (DOMINATED) or the member with the
    same canonical solution (DUPLICATE); `removed` lists the members evicted
    by an ACCEPTED entry.
    """

    outcome: InsertOutcome
    existing: ArchiveEntry | None = None
    removed: tuple[ArchiveEntry, ...] = ()

    @property
    def accepted(self) -> bool:
        return self.outcome is InsertOutcome.ACCEPTED


class Archive:
    """
    Unbounded set of mutually nondominated entries.

    Single writer; entries are kept in insertion order, which makes every
    iteration over the archive reproducible.
    """

    def __init__(self) -> None:
        self._entries: list[ArchiveEntry] = []
        self._keys: dict[tuple[Route, ...], ArchiveEntry] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[ArchiveEntry]:
        return iter(tuple(self._entries))

    @property
    def entries(self) -> tuple[ArchiveEntry, ...]:
        return tuple(self._entries)

    def objectives(self) -> list[ObjectiveVector]:
        return [entry.objectives for entry in self._entries]

    def is_member(self, entry: ArchiveEntry) -> bool:
        """True iff this very entry (not just an equal solution) is held."""
        return self._keys.get(entry.key) is entry

    def insert(self, entry: ArchiveEntry) -> InsertResult:
        """Offer an entry; see InsertResult for the possible outcomes."""
        vector = entry.objectives
        for member in self._entries:
            if dominates(member.objectives, vector):
                return InsertResult(InsertOutcome.DOMINATED, existing=member)

        duplicate = self._keys.get(entry.key)
        if duplicate is not None:
            return InsertResult(InsertOutcome.DUPLICATE, existing=duplicate)

        survivors: list[ArchiveEntry] = []
        removed: list[ArchiveEntry] = []
        for member in self._entries:
            if dominates(vector, member.objectives):
                removed.append(member)
                del self._keys[member.key]
            else:
                survivors.append(member)
        survivors.append(entry)
        self._entries = survivors
        self._keys[entry.key] = entry
        return InsertResult(InsertOutcome.ACCEPTED, removed=tuple(removed))

    def export_lines(self) -> list[str]:
        """One line per entry: the four objectives, then the gene string."""
        return [format_entry(entry) for entry in self._entries]


def archive_insert(archive: Archive, entry: ArchiveEntry) -> InsertResult:
    """Functional spelling of Archive.insert."""
    return archive.insert(entry)


def format_vector(vector: Vector) -> str:
    """Four numbers, space separated; integral objectives are written as ints."""
    g1, g2, g3, g4 = vector
    return f"{float(g1)!r} {int(g2)} {float(g3)!r} {int(g4)}"


def format_entry(entry: ArchiveEntry) -> str:
    return f"{format_vector(entry.objectives)} {format_chromosome(entry.chromosome)}"
