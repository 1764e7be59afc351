"""Fundamental data types and Pareto-dominance comparisons.

All objectives are maximized and integer-valued. The only real-valued
quantity anywhere in the library is the crowding distance, which lives in
``[0, +inf]``; infinity is represented as ``float("inf")`` so that
``inf + finite == inf`` and infinity compares greater than every finite
value.

The wrapper types here (:class:`BitString`, :class:`ObjectiveVector`,
:class:`Individual`) are the convenience API. The hot loops in
:mod:`moolab.engines` operate on raw numpy matrices instead and never
construct these objects; both layers share the same dominance semantics.
"""

from __future__ import annotations

from typing import Iterator, Sequence, Union

import numpy as np

VectorLike = Union["ObjectiveVector", Sequence[int], np.ndarray]
BitsLike = Union["BitString", Sequence[int], np.ndarray, str]


class BitString:
    """An immutable fixed-length vector of binary decision variables.

    Length is fixed at construction and every element is exactly 0 or 1.
    Accepts any 0/1 sequence or a text string like ``"1100"``.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: BitsLike):
        if isinstance(bits, BitString):
            self._bits = bits._bits
            return
        if isinstance(bits, str):
            bits = [int(c) for c in bits]
        src = np.asarray(bits)
        if src.ndim != 1 or src.size == 0:
            raise ValueError("bits must form a non-empty one-dimensional sequence")
        if not np.isin(src, (0, 1)).all():
            raise ValueError("every element must be exactly 0 or 1")
        arr = src.astype(np.uint8)
        arr.flags.writeable = False
        self._bits = arr

    @property
    def bits(self) -> np.ndarray:
        """The underlying read-only uint8 array."""
        return self._bits

    def __len__(self) -> int:
        return int(self._bits.size)

    def __getitem__(self, i):
        out = self._bits[i]
        return int(out) if np.isscalar(out) or out.ndim == 0 else BitString(out)

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self._bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self._bits.shape == other._bits.shape and bool(
            np.all(self._bits == other._bits)
        )

    def __hash__(self) -> int:
        return hash(self._bits.tobytes())

    def __str__(self) -> str:
        return "".join(str(int(b)) for b in self._bits)

    def __repr__(self) -> str:
        return f"BitString('{self}')"


class ObjectiveVector:
    """An immutable vector of m nonnegative integer objective values."""

    __slots__ = ("_values",)

    def __init__(self, values: VectorLike):
        if isinstance(values, ObjectiveVector):
            self._values = values._values
            return
        arr = np.asarray(values)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("values must form a non-empty one-dimensional sequence")
        if arr.dtype.kind == "f":
            if not np.all(arr == np.floor(arr)):
                raise ValueError("objective values must be integers")
        elif arr.dtype.kind not in "iu":
            raise ValueError("objective values must be integers")
        out = arr.astype(np.int64)
        if np.any(out < 0):
            raise ValueError("objective values must be nonnegative")
        out.flags.writeable = False
        self._values = out

    @property
    def values(self) -> np.ndarray:
        """The underlying read-only int64 array."""
        return self._values

    def __len__(self) -> int:
        return int(self._values.size)

    def __getitem__(self, i) -> int:
        return int(self._values[i])

    def __iter__(self) -> Iterator[int]:
        return (int(v) for v in self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, (tuple, list)):
            other = ObjectiveVector(other)
        if not isinstance(other, ObjectiveVector):
            return NotImplemented
        return self._values.shape == other._values.shape and bool(
            np.all(self._values == other._values)
        )

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def as_tuple(self) -> tuple:
        return tuple(int(v) for v in self._values)

    def __repr__(self) -> str:
        return f"ObjectiveVector{self.as_tuple()}"


class Individual:
    """A bit string paired with its cached objective vector.

    ``crowding`` is a mutable slot holding the most recently assigned
    crowding distance (a finite value >= 0 or ``float("inf")``); it is
    written only during survival selection and defaults to 0.0. The cached
    ``objectives`` must always equal the benchmark evaluation of
    ``genotype``; use :meth:`evaluated` to construct coherently.
    """

    __slots__ = ("genotype", "objectives", "crowding")

    def __init__(
        self,
        genotype: BitString,
        objectives: ObjectiveVector,
        crowding: float = 0.0,
    ):
        self.genotype = genotype if isinstance(genotype, BitString) else BitString(genotype)
        self.objectives = (
            objectives
            if isinstance(objectives, ObjectiveVector)
            else ObjectiveVector(objectives)
        )
        self.crowding = float(crowding)

    @classmethod
    def evaluated(cls, genotype: BitsLike, benchmark) -> "Individual":
        """Build an individual whose objective cache is coherent by construction."""
        geno = genotype if isinstance(genotype, BitString) else BitString(genotype)
        return cls(geno, benchmark.evaluate(geno))

    def __repr__(self) -> str:
        return f"Individual({self.genotype!r}, {self.objectives!r}, crowding={self.crowding})"


def as_objective_array(v: VectorLike) -> np.ndarray:
    """Coerce an objective vector of any accepted form to a 1-D int64 array."""
    if isinstance(v, ObjectiveVector):
        return v.values
    if isinstance(v, Individual):
        return v.objectives.values
    arr = np.asarray(v, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional objective vector")
    return arr


def as_bit_array(x: BitsLike) -> np.ndarray:
    """Coerce a bit string of any accepted form to a 1-D uint8 array."""
    if isinstance(x, BitString):
        return x.bits
    if isinstance(x, Individual):
        return x.genotype.bits
    return BitString(x).bits


def population_matrix(population) -> np.ndarray:
    """Coerce a population to an (S, m) int64 objective matrix.

    Accepts an (S, m) array, or any sequence of Individuals, ObjectiveVectors,
    or plain objective rows. Raises on an empty population or ragged rows.
    """
    if isinstance(population, np.ndarray) and population.ndim == 2:
        if population.shape[0] == 0:
            raise ValueError("population is empty")
        return population.astype(np.int64, copy=False)
    rows = [as_objective_array(p) for p in population]
    if not rows:
        raise ValueError("population is empty")
    if any(r.size != rows[0].size for r in rows):
        raise ValueError("objective counts differ within the population")
    return np.stack(rows)


def weakly_dominates(u: VectorLike, v: VectorLike) -> bool:
    """True iff ``u[i] >= v[i]`` for all i (maximization)."""
    ua, va = as_objective_array(u), as_objective_array(v)
    if ua.size != va.size:
        raise ValueError(f"objective counts differ: {ua.size} vs {va.size}")
    return bool(np.all(ua >= va))


def strictly_dominates(u: VectorLike, v: VectorLike) -> bool:
    """True iff u weakly dominates v and the vectors differ."""
    ua, va = as_objective_array(u), as_objective_array(v)
    if ua.size != va.size:
        raise ValueError(f"objective counts differ: {ua.size} vs {va.size}")
    return bool(np.all(ua >= va)) and bool(np.any(ua > va))


def hamming_distance(x: BitsLike, y: BitsLike) -> int:
    """Number of positions where two equal-length bit strings differ."""
    xa, ya = as_bit_array(x), as_bit_array(y)
    if xa.size != ya.size:
        raise ValueError(f"lengths differ: {xa.size} vs {ya.size}")
    return int(np.count_nonzero(xa != ya))
