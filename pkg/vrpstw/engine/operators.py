"""
Permutation operators for the giant-tour GA: three order-preserving
crossovers, swap mutation and fitness-proportional parent selection.

Each random operator draws its random choices from the rng it is given and
then delegates to a deterministic helper (`pmx_with_cuts`,
`obx_with_mask`, `uobx_with_mask`) that tests can drive directly.
Every output is a valid permutation of its parents' genes.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from itertools import chain

from vrpstw.engine.encoding import Chromosome
from vrpstw.errors import InputError

Pair = tuple[Chromosome, Chromosome]
Crossover = Callable[[random.Random, Chromosome, Chromosome], Pair]


def _check_parents(p1: Sequence[int], p2: Sequence[int]) -> None:
    if len(p1) != len(p2) or set(p1) != set(p2):
        raise InputError("Parents must be permutations of the same genes")


# ---------------------------------------------------------------------
# Partially mapped crossover
# ---------------------------------------------------------------------


def _pmx_child(
    receiver: Sequence[int], donor: Sequence[int], c1: int, c2: int
) -> Chromosome:
    child = list(receiver)
    child[c1:c2] = donor[c1:c2]
    mapping = {donor[i]: receiver[i] for i in range(c1, c2)}
    for i in chain(range(c1), range(c2, len(receiver))):
        gene = receiver[i]
        while gene in mapping:
            gene = mapping[gene]
        child[i] = gene
    return tuple(child)


def pmx_with_cuts(
    p1: Sequence[int], p2: Sequence[int], c1: int, c2: int
) -> Pair:
    """
    PMX with the exchanged segment at positions c1..c2-1.

    Child 1 takes p2's segment and keeps p1 elsewhere; a gene of p1 that
    clashes with the segment is replaced by following the positional
    mapping p2[i] -> p1[i] until a free gene is reached. Child 2 is the
    mirror image.
    """
    _check_parents(p1, p2)
    if not 0 <= c1 <= c2 <= len(p1):
        raise InputError(f"Invalid cut points ({c1}, {c2}) for length {len(p1)}")
    return _pmx_child(p1, p2, c1, c2), _pmx_child(p2, p1, c1, c2)


def pmx(rng: random.Random, p1: Chromosome, p2: Chromosome) -> Pair:
    """Partially mapped crossover with two uniform interior cut points."""
    size = len(p1)
    if size < 3:
        _check_parents(p1, p2)
        return tuple(p1), tuple(p2)
    c1, c2 = sorted(rng.sample(range(1, size), 2))
    return pmx_with_cuts(p1, p2, c1, c2)


# ---------------------------------------------------------------------
# Order based crossover
# ---------------------------------------------------------------------


def _obx_child(
    base: Sequence[int], order_source: Sequence[int], mask: Sequence[bool]
) -> Chromosome:
    selected = [i for i, bit in enumerate(mask) if bit]
    chosen = {base[i] for i in selected}
    reordered = [gene for gene in order_source if gene in chosen]
    child = list(base)
    for position, gene in zip(selected, reordered, strict=True):
        child[position] = gene
    return tuple(child)


def obx_with_mask(p1: Sequence[int], p2: Sequence[int], mask: Sequence[bool]) -> Pair:
    """
    OBX on a fixed position set: the genes of p1 at the selected positions
    are rearranged into the relative order they have in p2 (child 1), and
    vice versa (child 2).
    """
    _check_parents(p1, p2)
    if len(mask) != len(p1):
        raise InputError("Mask length must equal chromosome length")
    return _obx_child(p1, p2, mask), _obx_child(p2, p1, mask)


def obx(rng: random.Random, p1: Chromosome, p2: Chromosome) -> Pair:
    """Order based crossover; each position is selected with probability 1/2."""
    mask = [rng.random() < 0.5 for _ in p1]
    return obx_with_mask(p1, p2, mask)


# ---------------------------------------------------------------------
# Uniform order based crossover
# ---------------------------------------------------------------------


def _uobx_child(
    keeper: Sequence[int], filler: Sequence[int], mask: Sequence[bool]
) -> Chromosome:
    kept = {keeper[i] for i, bit in enumerate(mask) if bit}
    missing = iter([gene for gene in filler if gene not in kept])
    return tuple(keeper[i] if bit else next(missing) for i, bit in enumerate(mask))


def uobx_with_mask(
    p1: Sequence[int], p2: Sequence[int], mask: Sequence[bool]
) -> Pair:
    """
    UOBX on a fixed binary mask: child 1 keeps p1 where the mask is set and
    fills the other positions with p1's missing genes in p2's order; child 2
    is the mirror image.
    """
    _check_parents(p1, p2)
    if len(mask) != len(p1):
        raise InputError("Mask length must equal chromosome length")
    return _uobx_child(p1, p2, mask), _uobx_child(p2, p1, mask)


def uobx(rng: random.Random, p1: Chromosome, p2: Chromosome) -> Pair:
    """Uniform order based crossover with a uniformly random mask."""
    mask = [rng.random() < 0.5 for _ in p1]
    return uobx_with_mask(p1, p2, mask)


CROSSOVERS: dict[str, Crossover] = {"PMX": pmx, "OBX": obx, "UOBX": uobx}


# ---------------------------------------------------------------------
# Mutation and selection
# ---------------------------------------------------------------------


def swap_mutation(
    rng: random.Random, chromosome: Chromosome, p_mut: float
) -> Chromosome:
    """
    With probability p_mut, exchange two distinct uniformly chosen genes.

    The probability applies to the whole individual, so a single gene moves
    with probability 2 * p_mut / N.
    """
    if p_mut <= 0 or len(chromosome) < 2:
        return chromosome
    if rng.random() >= p_mut:
        return chromosome
    i, j = rng.sample(range(len(chromosome)), 2)
    genes = list(chromosome)
    genes[i], genes[j] = genes[j], genes[i]
    return tuple(genes)


def select_parent(rng: random.Random, fitness: Sequence[float]) -> int:
    """Roulette wheel: index i with probability fitness[i] / sum(fitness)."""
    if not fitness:
        raise InputError("Cannot select from an empty population")
    if min(fitness) <= 0:
        raise InputError("Roulette selection needs strictly positive fitness")
    return rng.choices(range(len(fitness)), weights=fitness)[0]
