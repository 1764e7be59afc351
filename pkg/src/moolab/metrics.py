"""Pareto-front coverage accounting, neighbor diagnostics, summary statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .benchmarks import ParetoFrontDescriptor
from .core import ObjectiveVector, as_objective_array, population_matrix


class CoverageCounter:
    """A bit set over the front's dense index, for incremental coverage counts.

    Rows added through :meth:`add` are assumed to be images of the
    descriptor's benchmark (and hence on the front); use :func:`coverage`
    when the input needs validation. Not safe to share across threads while
    being updated.
    """

    def __init__(self, descriptor: ParetoFrontDescriptor):
        self.descriptor = descriptor
        self._covered = np.zeros(descriptor.size, dtype=bool)
        self._count = 0

    def add(self, population) -> int:
        """Mark a population's vectors covered; returns the new count."""
        objs = population_matrix(population)
        keys = self.descriptor.keys_for(objs)
        fresh = keys[~self._covered[keys]]
        if fresh.size:
            self._covered[fresh] = True
            self._count = int(np.count_nonzero(self._covered))
        return self._count

    def add_vector(self, v) -> int:
        self._covered[self.descriptor.index_of(v)] = True
        self._count = int(np.count_nonzero(self._covered))
        return self._count

    @property
    def count(self) -> int:
        return self._count

    @property
    def covered(self) -> np.ndarray:
        return self._covered.copy()


def coverage(population, descriptor: ParetoFrontDescriptor) -> int:
    """Number of distinct front points equal to some member's objectives.

    Duplicates never double-count. Every distinct vector is validated
    against the descriptor, so a population evaluated under a different
    benchmark raises instead of silently miscounting. An empty population
    covers nothing.
    """
    members = population if isinstance(population, np.ndarray) else list(population)
    if len(members) == 0:
        return 0
    objs = population_matrix(members)
    distinct = np.unique(objs, axis=0)
    return len({descriptor.index_of(row) for row in distinct})


def neighbors(v, descriptor: ParetoFrontDescriptor) -> List[ObjectiveVector]:
    """Front points differing from v by exactly 1 in one free coordinate.

    Ordered by free coordinate (ascending), decrement before increment.
    Interior coordinates contribute two neighbors each, boundary ones a
    single neighbor, so an mOneMinMax point has between m/2 and m of them
    and a 3-OneMinMax point between 2 and 4.
    """
    arr = as_objective_array(v)
    descriptor.index_of(arr)  # validates membership
    bench = descriptor.benchmark
    free = bench._front_free(arr)
    out: List[ObjectiveVector] = []
    for k in range(free.size):
        for delta in (-1, +1):
            moved = int(free[k]) + delta
            if 0 <= moved <= bench.n_prime:
                shifted = free.copy()
                shifted[k] = moved
                out.append(ObjectiveVector(bench._front_from_free(shifted)))
    return out


@dataclass(frozen=True)
class SummaryStats:
    """Mean, population standard deviation, min, and max of a metric."""

    mean: float
    std: float
    min: float
    max: float


def summarize(values: Sequence[float]) -> SummaryStats:
    """Summary statistics over repetitions (population std, ddof=0)."""
    arr = np.asarray(list(values), dtype=np.float64)
    if arr.size == 0:
        raise ValueError("cannot summarize an empty sequence")
    return SummaryStats(
        mean=float(arr.mean()),
        std=float(arr.std()),
        min=float(arr.min()),
        max=float(arr.max()),
    )
