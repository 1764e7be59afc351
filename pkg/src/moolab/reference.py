"""Slow, obviously-correct reference implementations used as test oracles.

The optimized routines in :mod:`moolab.ranking` and :mod:`moolab.crowding`
are required to agree exactly (not approximately) with the functions here.
Everything in this module is written as a direct, line-by-line transcription
of the textbook procedures, using plain Python lists and loops, so that its
correctness can be checked by eye.  Nothing here is meant to be fast.
"""

from __future__ import annotations

import math
from typing import Sequence


def _strictly_dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise >= everywhere and > somewhere (maximization)."""
    ge_all = all(ui >= vi for ui, vi in zip(u, v))
    gt_any = any(ui > vi for ui, vi in zip(u, v))
    return ge_all and gt_any


def peel_fronts(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Partition indices into non-dominated fronts by repeated peeling.

    Front 1 is the set of vectors strictly dominated by nothing; each later
    front is the non-dominated subset of what remains.  Within a front,
    indices keep their input order.  O(k * |V|^2) where k is the number of
    fronts; intended for populations of at most a few hundred vectors.
    """
    if len(vectors) == 0:
        raise ValueError("cannot sort an empty population")
    remaining = list(range(len(vectors)))
    fronts: list[list[int]] = []
    while remaining:
        front = []
        for i in remaining:
            dominated = any(
                _strictly_dominates(vectors[j], vectors[i])
                for j in remaining
                if j != i
            )
            if not dominated:
                front.append(i)
        fronts.append(front)
        remaining = [i for i in remaining if i not in front]
    return fronts


def crowding_reference(vectors: Sequence[Sequence[int]]) -> list[float]:
    """Crowding distance of a mutually non-dominated set, one float per input.

    For each objective the set is sorted by descending value, ties broken by
    ascending input position.  The first and last of each sorted order are
    assigned infinity; every interior element accumulates the gap between its
    sorted neighbours divided by the objective's full range.  A zero range
    contributes nothing (the boundary assignments still apply).

    The arithmetic is ordinary float64 and the accumulation order (objective
    by objective, one term per objective) matches :mod:`moolab.crowding`
    exactly, so agreement can be asserted bit for bit.
    """
    size = len(vectors)
    if size == 0:
        raise ValueError("cannot compute crowding distance of an empty set")
    m = len(vectors[0])
    dist = [0.0] * size
    for i in range(m):
        order = sorted(range(size), key=lambda j: (-vectors[j][i], j))
        dist[order[0]] = math.inf
        dist[order[-1]] = math.inf
        denom = float(vectors[order[0]][i]) - float(vectors[order[-1]][i])
        if denom == 0.0:
            continue
        for pos in range(1, size - 1):
            j = order[pos]
            gap = float(vectors[order[pos - 1]][i]) - float(vectors[order[pos + 1]][i])
            dist[j] = dist[j] + gap / denom
    return dist
