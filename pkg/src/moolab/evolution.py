"""Parent selection, variation operators, and survival selection.

Two API layers share one implementation: object-level operations on
:class:`~moolab.core.Individual` sequences (the documented contracts), and
matrix-level routines used by the engines, which carry whole populations as
(N, n) uint8 bit matrices and (N, m) int64 objective matrices.

All randomness flows through an explicitly passed ``numpy.random.Generator``;
nothing here seeds or caches generators, so callers own reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from .core import BitString, Individual, as_bit_array, population_matrix
from .crowding import crowding_distance_matrix
from .ranking import FrontPartition, non_dominated_sort

MUTATION_ONE_BIT = "one-bit"
MUTATION_BITWISE = "bitwise"
CROSSOVER_OFF = "off"
CROSSOVER_ONE_POINT = "one-point"


class SurvivalVariant(str, Enum):
    """Which truncation rule closes each NSGA-II generation."""

    ORIGINAL = "original"
    SEQUENTIAL = "sequential"


@dataclass(frozen=True)
class VariationConfig:
    """Mutation and crossover settings for offspring generation.

    ``mutation_rate=None`` means the standard 1/n, resolved at run time.
    Crossover, when on, recombines consecutive pairs of the shuffled parent
    order; each pair is recombined independently with ``crossover_prob``.
    """

    mutation: str = MUTATION_BITWISE
    mutation_rate: Optional[float] = None
    crossover: str = CROSSOVER_OFF
    crossover_prob: float = 0.9

    def __post_init__(self):
        if self.mutation not in (MUTATION_ONE_BIT, MUTATION_BITWISE):
            raise ValueError(f"unknown mutation kind {self.mutation!r}")
        if self.crossover not in (CROSSOVER_OFF, CROSSOVER_ONE_POINT):
            raise ValueError(f"unknown crossover kind {self.crossover!r}")
        if self.mutation_rate is not None and not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("mutation rate must lie in [0, 1]")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ValueError("crossover probability must lie in [0, 1]")


def fair_parent_selection(population: Sequence, rng: np.random.Generator) -> list:
    """Every member exactly once, in a uniformly random order.

    The random order is what makes consecutive-pair crossover pairing
    unbiased; without crossover only the multiset matters.
    """
    order = rng.permutation(len(population))
    return [population[i] for i in order]


def one_bit_mutation(x, rng: np.random.Generator) -> BitString:
    """Flip exactly one uniformly chosen bit."""
    bits = as_bit_array(x).copy()
    pos = int(rng.integers(bits.size))
    bits[pos] ^= 1
    return BitString(bits)


def bitwise_mutation(x, rate: float, rng: np.random.Generator) -> BitString:
    """Flip each bit independently with the given rate."""
    if not 0.0 <= rate <= 1.0:
        raise ValueError("mutation rate must lie in [0, 1]")
    bits = as_bit_array(x)
    mask = rng.random(bits.size) < rate
    return BitString(bits ^ mask)


def one_point_crossover(a, b, rng: np.random.Generator) -> tuple:
    """Exchange the first i bits at a uniform cut i in [1..n].

    Returns ``(child1, child2)`` with ``child1 = b[:i] + a[i:]`` and
    ``child2 = a[:i] + b[i:]``.
    """
    aa, ba = as_bit_array(a), as_bit_array(b)
    if aa.size != ba.size:
        raise ValueError(f"lengths differ: {aa.size} vs {ba.size}")
    cut = int(rng.integers(1, aa.size + 1))
    child1 = np.concatenate([ba[:cut], aa[cut:]])
    child2 = np.concatenate([aa[:cut], ba[cut:]])
    return BitString(child1), BitString(child2)


def one_bit_mutation_matrix(bits: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    out = bits.copy()
    pos = rng.integers(0, bits.shape[1], size=bits.shape[0])
    out[np.arange(bits.shape[0]), pos] ^= 1
    return out


def bitwise_mutation_matrix(
    bits: np.ndarray, rate: float, rng: np.random.Generator
) -> np.ndarray:
    return bits ^ (rng.random(bits.shape) < rate)


def one_point_crossover_matrix(
    bits: np.ndarray, apply_prob: float, rng: np.random.Generator
) -> np.ndarray:
    """Recombine consecutive row pairs (0,1), (2,3), ... of a shuffled matrix.

    Draw order is fixed for reproducibility: one gate per pair, then one cut
    per pair (cuts are drawn even for pairs whose gate is off).
    """
    count, n = bits.shape
    if count % 2 != 0:
        raise ValueError("crossover pairing needs an even number of rows")
    pairs = count // 2
    gates = rng.random(pairs) < apply_prob
    cuts = rng.integers(1, n + 1, size=pairs)
    swap = (np.arange(n) < cuts[:, None]) & gates[:, None]
    first, second = bits[0::2], bits[1::2]
    out = np.empty_like(bits)
    out[0::2] = np.where(swap, second, first)
    out[1::2] = np.where(swap, first, second)
    return out


@dataclass(frozen=True)
class SelectionOutcome:
    """Result of one survival-selection step over a combined population R.

    ``kept`` are the surviving indices into R, ascending (survivors keep
    R's relative order). ``distances`` is the crowding assignment computed
    on fronts F_1..F_i* before any truncation; rows of later fronts, which
    never get a distance, hold NaN. ``partition`` is the front structure.
    """

    kept: np.ndarray
    distances: np.ndarray
    partition: FrontPartition

    @property
    def positive_count(self) -> int:
        # NaN compares False, so unscored rows never count
        return int(np.count_nonzero(self.distances > 0))


def survival_indices(
    objs: np.ndarray,
    n_keep: int,
    variant: SurvivalVariant = SurvivalVariant.ORIGINAL,
    rng: Optional[np.random.Generator] = None,
    on_remove: Optional[Callable[[np.ndarray, np.ndarray], None]] = None,
) -> SelectionOutcome:
    """Select ``n_keep`` survivors from an (R, m) objective matrix.

    Fronts before the critical one are kept whole. The critical front is
    truncated by crowding distance: the original variant keeps the largest
    distances in one shot, the sequential variant repeatedly removes a
    smallest-distance individual and refreshes the remaining distances to
    match a full recomputation. Ties are always broken uniformly at random
    with ``rng``.

    ``on_remove``, used by tests and diagnostics, fires after each
    sequential removal with the surviving critical-front indices and their
    refreshed distances. Recomputation is skipped when the removed distance
    is exactly zero; that this is observationally equivalent is a property
    of the distance (see :mod:`moolab.crowding`) and is what ``on_remove``
    lets the test suite verify.
    """
    objs = np.asarray(objs, dtype=np.int64)
    rng = np.random.default_rng() if rng is None else rng
    variant = SurvivalVariant(variant)
    total = objs.shape[0]
    if not 1 <= n_keep <= total:
        raise ValueError(f"survivor count {n_keep} outside 1..{total}")

    partition = non_dominated_sort(objs)
    istar = partition.critical_index(n_keep)
    whole = (
        np.concatenate(partition.fronts[: istar - 1])
        if istar > 1
        else np.empty(0, dtype=np.int64)
    )
    critical = partition.fronts[istar - 1]

    distances = np.full(total, np.nan)
    for front in partition.fronts[:istar]:
        distances[front] = crowding_distance_matrix(objs[front])

    need = n_keep - whole.size
    if need == critical.size:
        kept_critical = critical
    elif variant is SurvivalVariant.ORIGINAL:
        cd = distances[critical]
        order = np.lexsort((rng.random(critical.size), -cd))
        kept_critical = critical[order[:need]]
    else:
        alive = critical.copy()
        cd = distances[critical].copy()
        while alive.size > need:
            ties = np.flatnonzero(cd == cd.min())
            pick = int(ties[rng.integers(ties.size)])
            removed_zero = cd[pick] == 0.0
            alive = np.delete(alive, pick)
            cd = np.delete(cd, pick)
            if not removed_zero:
                cd = crowding_distance_matrix(objs[alive])
            if on_remove is not None:
                on_remove(alive.copy(), cd.copy())
        kept_critical = alive

    kept = np.sort(np.concatenate([whole, kept_critical]))
    distances.flags.writeable = False
    return SelectionOutcome(kept, distances, partition)


def _select(population, n_keep, variant, rng, on_remove=None):
    objs = population_matrix(population)
    outcome = survival_indices(objs, n_keep, variant, rng, on_remove)
    if isinstance(population, np.ndarray):
        return population[outcome.kept]
    members = list(population)
    survivors = [members[i] for i in outcome.kept]
    for member, i in zip(survivors, outcome.kept):
        if isinstance(member, Individual):
            member.crowding = float(outcome.distances[i])
    return survivors


def survival_select_original(
    population, n_keep: int, rng: np.random.Generator
):
    """One-shot truncation: keep the largest crowding distances, random ties."""
    return _select(population, n_keep, SurvivalVariant.ORIGINAL, rng)


def survival_select_sequential(
    population, n_keep: int, rng: np.random.Generator, on_remove=None
):
    """Iterated removal of a smallest-distance individual with refresh."""
    return _select(population, n_keep, SurvivalVariant.SEQUENTIAL, rng, on_remove)
