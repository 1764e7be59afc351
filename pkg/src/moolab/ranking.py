"""Non-dominated sorting: partition a population into Pareto fronts.

Front 1 holds everything strictly dominated by nothing; front k+1 holds the
non-dominated remainder after fronts 1..k are peeled off.  Individuals with
identical objective vectors always share a front, and within a front the
input order is preserved.

The implementation first deduplicates objective vectors (populations here
typically contain far fewer distinct vectors than individuals), builds the
strict-dominance relation among the distinct vectors, and peels fronts by
dominator counting.  Cost is O(K^2 * m) in the number K of distinct vectors,
so it is intended for populations whose distinct-image count is moderate
(a few thousand); K is at most the Pareto front size on the benchmarks here.
Equivalence with a brute-force peeling oracle is enforced by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import population_matrix


def _dedup_rows(objs: np.ndarray):
    """Return (distinct_rows, inverse) with inverse mapping rows to distinct ids.

    Uses a mixed-radix integer key when the per-column value spans allow it
    (orders of magnitude faster than np.unique over rows), falling back to
    np.unique(axis=0) otherwise. Distinct ids are assigned in key order; only
    the grouping matters to the caller, not the order.
    """
    mins = objs.min(axis=0)
    spans = (objs.max(axis=0) - mins + 1).astype(object)
    total = 1
    for s in spans:
        total *= int(s)
    if total <= 2**62:
        radix = np.empty(objs.shape[1], dtype=np.int64)
        radix[-1] = 1
        for i in range(objs.shape[1] - 2, -1, -1):
            radix[i] = radix[i + 1] * int(spans[i + 1])
        keys = (objs - mins) @ radix
        _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
        return objs[first], inverse
    distinct, inverse = np.unique(objs, axis=0, return_inverse=True)
    return distinct, inverse.reshape(-1)


def _front_labels_distinct(distinct: np.ndarray) -> np.ndarray:
    """0-based front label for each of K pairwise-distinct objective rows."""
    k = distinct.shape[0]
    # rows are distinct, so mutual weak dominance is impossible: strict
    # dominance is componentwise >= with the diagonal cleared
    strict = np.all(distinct[:, None, :] >= distinct[None, :, :], axis=2)
    np.fill_diagonal(strict, False)
    dominators = strict.sum(axis=0)
    labels = np.empty(k, dtype=np.int64)
    alive = np.ones(k, dtype=bool)
    front = 0
    while alive.any():
        current = alive & (dominators == 0)
        labels[current] = front
        alive &= ~current
        dominators = dominators - strict[current].sum(axis=0)
        front += 1
    return labels


@dataclass(frozen=True)
class FrontPartition:
    """Ordered fronts as index arrays over the input population."""

    fronts: tuple

    @property
    def total(self) -> int:
        return sum(len(f) for f in self.fronts)

    def front_sizes(self) -> list[int]:
        return [len(f) for f in self.fronts]

    def critical_index(self, n_keep: int) -> int:
        """Smallest 1-based i* whose cumulative front size reaches n_keep."""
        if n_keep < 1 or n_keep > self.total:
            raise ValueError(
                f"budget {n_keep} outside the population size 1..{self.total}"
            )
        seen = 0
        for i, f in enumerate(self.fronts, start=1):
            seen += len(f)
            if seen >= n_keep:
                return i
        raise AssertionError("unreachable: fronts partition the population")


def front_labels(objs: np.ndarray) -> np.ndarray:
    """0-based front label per row of an (S, m) objective matrix."""
    distinct, inverse = _dedup_rows(objs)
    return _front_labels_distinct(distinct)[inverse]


def non_dominated_sort(population) -> FrontPartition:
    """Partition a population into non-dominated fronts.

    Accepts a sequence of Individuals or ObjectiveVectors, or an (S, m)
    objective matrix. Raises on empty input.
    """
    objs = population_matrix(population)
    labels = front_labels(objs)
    fronts = tuple(
        np.flatnonzero(labels == f) for f in range(int(labels.max()) + 1)
    )
    return FrontPartition(fronts)


def critical_front_index(partition: FrontPartition, n_keep: int) -> int:
    """Smallest 1-based i* with |F_1 u ... u F_i*| >= n_keep."""
    return partition.critical_index(n_keep)
