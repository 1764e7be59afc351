"""Block-structured OneMinMax benchmarks and their Pareto fronts.

Two pseudo-Boolean families, both maximized and both with the property that
every bit string is Pareto optimal:

* ``MommBenchmark`` (id ``"momm"``): the n bits are split into m/2 equal
  blocks of length n' = 2n/m; objective 2k-1 counts the zeros of block k and
  objective 2k counts its ones.  The Pareto front is
  ``{(i_1, n'-i_1, ..., i_{m/2}, n'-i_{m/2})}`` with ``(n'+1)^(m/2)`` points.
* ``ThreeOmmBenchmark`` (id ``"3omm"``): objectives are (total zeros, ones in
  the first half, ones in the second half); the front has ``(n/2+1)^2``
  points.

Front enumeration is in lexicographic order of the free coordinates
(``i_1..i_{m/2}``, resp. the two half-counts), which fixes a dense index in
``[0..M-1]`` for every front point; coverage accounting builds on that index.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

import numpy as np

from .core import BitsLike, BitString, ObjectiveVector, as_bit_array

ENUMERATION_GUARD = 10**8


class FrontTooLargeError(RuntimeError):
    """Raised when a Pareto front is too large to enumerate or index densely."""


class MommBenchmark:
    """m-objective OneMinMax over n bits (m even, n a multiple of m/2)."""

    id = "momm"

    def __init__(self, n: int, m: int):
        if m < 2 or m % 2 != 0:
            raise ValueError(f"objective count m must be even and >= 2, got {m}")
        if n < 1 or n % (m // 2) != 0:
            raise ValueError(
                f"problem size n must be a positive multiple of m/2 = {m // 2}, got {n}"
            )
        self.n = int(n)
        self.m = int(m)
        self.n_prime = 2 * self.n // self.m

    def evaluate_matrix(self, bits: np.ndarray) -> np.ndarray:
        """Evaluate a whole (S, n) population of 0/1 rows to an (S, m) matrix."""
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 2 or bits.shape[1] != self.n:
            raise ValueError(f"expected shape (S, {self.n}), got {bits.shape}")
        half = self.m // 2
        ones = bits.reshape(bits.shape[0], half, self.n_prime).sum(axis=2, dtype=np.int64)
        out = np.empty((bits.shape[0], self.m), dtype=np.int64)
        out[:, 0::2] = self.n_prime - ones
        out[:, 1::2] = ones
        return out

    def evaluate(self, x: BitsLike) -> ObjectiveVector:
        xa = as_bit_array(x)
        if xa.size != self.n:
            raise ValueError(f"expected a length-{self.n} bit string, got {xa.size}")
        return ObjectiveVector(self.evaluate_matrix(xa[None, :])[0])

    def front(self) -> "ParetoFrontDescriptor":
        return ParetoFrontDescriptor(self)

    def front_size(self) -> int:
        return (self.n_prime + 1) ** (self.m // 2)

    def _front_points(self) -> Iterator[ObjectiveVector]:
        half = self.m // 2
        for free in itertools.product(range(self.n_prime + 1), repeat=half):
            v = np.empty(self.m, dtype=np.int64)
            v[0::2] = free
            v[1::2] = self.n_prime - np.asarray(free)
            yield ObjectiveVector(v)

    def _front_radix(self) -> np.ndarray:
        half = self.m // 2
        base = self.n_prime + 1
        return base ** np.arange(half - 1, -1, -1, dtype=np.int64)

    def _front_index(self, v: np.ndarray) -> int:
        if v.size != self.m:
            raise ValueError(f"expected {self.m} objectives, got {v.size}")
        zeros, ones = v[0::2], v[1::2]
        if np.any(zeros < 0) or np.any(zeros > self.n_prime) or np.any(zeros + ones != self.n_prime):
            raise ValueError(f"{tuple(int(c) for c in v)} is not a Pareto front point")
        return int(zeros @ self._front_radix())

    def _front_keys(self, objs: np.ndarray) -> np.ndarray:
        # rows are assumed to be images of this benchmark (always on the front)
        return objs[:, 0::2] @ self._front_radix()

    def _front_free(self, v: np.ndarray) -> np.ndarray:
        """Free coordinates (i_1..i_{m/2}) of a front point, each in [0..n']."""
        return v[0::2].copy()

    def _front_from_free(self, free: np.ndarray) -> np.ndarray:
        v = np.empty(self.m, dtype=np.int64)
        v[0::2] = free
        v[1::2] = self.n_prime - free
        return v

    def label(self) -> str:
        return f"momm(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, MommBenchmark) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self) -> int:
        return hash((self.id, self.n, self.m))

    def __repr__(self) -> str:
        return f"MommBenchmark(n={self.n}, m={self.m})"


class ThreeOmmBenchmark:
    """3-objective OneMinMax: (total zeros, ones in first half, ones in second half)."""

    id = "3omm"
    m = 3

    def __init__(self, n: int):
        if n < 2 or n % 2 != 0:
            raise ValueError(f"problem size n must be even and positive, got {n}")
        self.n = int(n)
        self.n_prime = self.n // 2

    def evaluate_matrix(self, bits: np.ndarray) -> np.ndarray:
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 2 or bits.shape[1] != self.n:
            raise ValueError(f"expected shape (S, {self.n}), got {bits.shape}")
        first = bits[:, : self.n_prime].sum(axis=1, dtype=np.int64)
        second = bits[:, self.n_prime :].sum(axis=1, dtype=np.int64)
        out = np.empty((bits.shape[0], 3), dtype=np.int64)
        out[:, 0] = self.n - first - second
        out[:, 1] = first
        out[:, 2] = second
        return out

    def evaluate(self, x: BitsLike) -> ObjectiveVector:
        xa = as_bit_array(x)
        if xa.size != self.n:
            raise ValueError(f"expected a length-{self.n} bit string, got {xa.size}")
        return ObjectiveVector(self.evaluate_matrix(xa[None, :])[0])

    def front(self) -> "ParetoFrontDescriptor":
        return ParetoFrontDescriptor(self)

    def front_size(self) -> int:
        return (self.n_prime + 1) ** 2

    def _front_points(self) -> Iterator[ObjectiveVector]:
        for v2, v3 in itertools.product(range(self.n_prime + 1), repeat=2):
            yield ObjectiveVector((self.n - v2 - v3, v2, v3))

    def _front_index(self, v: np.ndarray) -> int:
        if v.size != 3:
            raise ValueError(f"expected 3 objectives, got {v.size}")
        zeros, v2, v3 = int(v[0]), int(v[1]), int(v[2])
        ok = (
            0 <= v2 <= self.n_prime
            and 0 <= v3 <= self.n_prime
            and zeros == self.n - v2 - v3
        )
        if not ok:
            raise ValueError(f"{(zeros, v2, v3)} is not a Pareto front point")
        return v2 * (self.n_prime + 1) + v3

    def _front_keys(self, objs: np.ndarray) -> np.ndarray:
        return objs[:, 1] * (self.n_prime + 1) + objs[:, 2]

    def _front_free(self, v: np.ndarray) -> np.ndarray:
        """Free coordinates (half-counts of ones), each in [0..n/2]."""
        return v[1:].copy()

    def _front_from_free(self, free: np.ndarray) -> np.ndarray:
        return np.array(
            [self.n - int(free[0]) - int(free[1]), free[0], free[1]], dtype=np.int64
        )

    def label(self) -> str:
        return f"3omm(n={self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ThreeOmmBenchmark) and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.id, self.n))

    def __repr__(self) -> str:
        return f"ThreeOmmBenchmark(n={self.n})"


class ParetoFrontDescriptor:
    """A benchmark's Pareto front: its size M, an enumerator, and a dense index.

    ``points()`` yields every front vector exactly once, in lexicographic
    order of the free coordinates; ``index_of`` returns a vector's position
    in that order, a bijection with ``[0..M-1]``.
    """

    def __init__(self, benchmark):
        self.benchmark = benchmark
        self.size = benchmark.front_size()

    def points(self) -> Iterator[ObjectiveVector]:
        if self.size > ENUMERATION_GUARD:
            raise FrontTooLargeError(
                f"front has {self.size} points, enumeration guard is {ENUMERATION_GUARD}"
            )
        return self.benchmark._front_points()

    def index_of(self, v) -> int:
        arr = np.asarray(v.values if isinstance(v, ObjectiveVector) else v, dtype=np.int64)
        return self.benchmark._front_index(arr)

    def keys_for(self, objs: np.ndarray) -> np.ndarray:
        """Dense front indices for an (S, m) matrix of benchmark images."""
        return self.benchmark._front_keys(np.asarray(objs, dtype=np.int64))

    def __repr__(self) -> str:
        return f"ParetoFrontDescriptor({self.benchmark!r}, size={self.size})"


def eval_momm(b: MommBenchmark, x: BitsLike) -> ObjectiveVector:
    """Evaluate one bit string under m-objective OneMinMax."""
    return b.evaluate(x)


def eval_3omm(b: ThreeOmmBenchmark, x: BitsLike) -> ObjectiveVector:
    """Evaluate one bit string under 3-objective OneMinMax."""
    return b.evaluate(x)


def front_size(d: ParetoFrontDescriptor) -> int:
    """Number of Pareto front points M."""
    return d.size


def enumerate_front(d: ParetoFrontDescriptor) -> Iterator[ObjectiveVector]:
    """Yield every front point once, in the descriptor's canonical order."""
    return d.points()


def front_index(d: ParetoFrontDescriptor, v) -> int:
    """Rank of a front point in the canonical enumeration order."""
    return d.index_of(v)


def benchmark_from_id(benchmark_id: str, n: int, m: Optional[int] = None):
    """Construct a benchmark from its CLI identifier ("momm" or "3omm")."""
    if benchmark_id == "momm":
        if m is None:
            raise ValueError("benchmark 'momm' requires an objective count m")
        return MommBenchmark(n, m)
    if benchmark_id == "3omm":
        if m is not None and m != 3:
            raise ValueError("benchmark '3omm' has exactly 3 objectives")
        return ThreeOmmBenchmark(n)
    raise ValueError(f"unknown benchmark id {benchmark_id!r} (expected 'momm' or '3omm')")
