"""Crowding distance and the diagnostics around its failure mode.

For each objective the set is sorted by descending value (ties broken by
ascending input position, so results are deterministic); the first and last
of each sorted order are assigned infinity, and every interior element
accumulates the gap between its two sorted neighbours divided by the
objective's full range.  When an objective's range is zero the interior
contributions are zero but the boundary assignments still apply.

Because the distance treats objectives independently, at most
``2 * sum_i nu_i`` entries can be positive, where ``nu_i`` is the number of
distinct values in objective i (:func:`positive_count_bound`).  On the
block-structured benchmarks in :mod:`moolab.benchmarks` that is O(n) no
matter how large the population, which is what starves survival selection
of information and drives the stagnation experiments in the harness.

Removing an individual whose distance is exactly zero leaves every other
distance unchanged, bit for bit: a zero-distance individual is strictly
interior to a run of at least three equal values in every objective, so no
boundary, gap, or range term involves it.  Sequential survival selection
relies on this to skip recomputation after zero-distance removals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import population_matrix


def crowding_distance_matrix(objs: np.ndarray) -> np.ndarray:
    """Crowding distances for an (S, m) matrix of pairwise non-dominated rows.

    Mutual non-domination is the caller's guarantee and is not re-checked
    (the engines establish it structurally via non-dominated sorting).
    """
    objs = np.asarray(objs, dtype=np.int64)
    size = objs.shape[0]
    if size == 0:
        raise ValueError("cannot compute crowding distance of an empty set")
    dist = np.zeros(size, dtype=np.float64)
    for i in range(objs.shape[1]):
        col = objs[:, i]
        order = np.argsort(-col, kind="stable")
        denom = float(col[order[0]] - col[order[-1]])
        if denom != 0.0:
            gaps = (col[order[:-2]] - col[order[2:]]).astype(np.float64)
            dist[order[1:-1]] += gaps / denom
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
    return dist


@dataclass(frozen=True)
class CrowdingAssignment:
    """Distances (one per input, finite >= 0 or +inf) and the positive tally."""

    distances: np.ndarray
    positive_count: int


def crowding_distance(S, m: Optional[int] = None) -> CrowdingAssignment:
    """Crowding distances of a pairwise non-dominated population.

    Accepts a sequence of Individuals or ObjectiveVectors, or an (S, m)
    objective matrix; ``m``, when given, is validated against the data.
    """
    objs = population_matrix(S)
    if m is not None and objs.shape[1] != m:
        raise ValueError(f"expected {m} objectives, got {objs.shape[1]}")
    dist = crowding_distance_matrix(objs)
    dist.flags.writeable = False
    return CrowdingAssignment(dist, int(np.count_nonzero(dist > 0)))


def positive_crowding_count(S, m: Optional[int] = None) -> int:
    """Number of individuals with strictly positive (including +inf) distance."""
    return crowding_distance(S, m).positive_count


def positive_count_bound(value_counts) -> int:
    """Upper bound 2 * sum(nu_i) on the positive-distance count.

    ``value_counts`` are the per-objective numbers of distinct values nu_i
    actually occurring in the population. Per objective, only the two
    individuals adjacent to each value change (plus the sort boundaries) can
    pick up a positive term, giving at most 2 * nu_i candidates.
    """
    counts = [int(c) for c in value_counts]
    if not counts or any(c < 1 for c in counts):
        raise ValueError("every per-objective distinct-value count must be >= 1")
    return 2 * sum(counts)
