"""Dominance relations and the basic value types."""

import itertools

import numpy as np
import pytest

from moolab import core
from moolab.benchmarks import MommBenchmark

from conftest import random_bits


class TestDominance:
    @pytest.mark.parametrize(
        "u,v,weak,strict",
        [
            ((3, 2), (3, 2), True, False),
            ((3, 2), (2, 2), True, True),
            ((3, 2), (2, 3), False, False),
            ((0, 0, 5), (0, 0, 4), True, True),
            ((1, 1), (1, 2), False, False),
            ((4, 4, 4), (4, 4, 4), True, False),
        ],
    )
    def test_examples(self, u, v, weak, strict):
        assert core.weakly_dominates(u, v) is weak
        assert core.strictly_dominates(u, v) is strict

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            core.weakly_dominates((1, 2), (1, 2, 3))
        with pytest.raises(ValueError):
            core.strictly_dominates((1,), (1, 2))

    def test_partial_order_axioms_exhaustive(self):
        # All vectors in {0..3}^3: irreflexive strict part, transitive,
        # and weak dominance both ways only for equal vectors.
        vecs = list(itertools.product(range(4), repeat=3))
        k = len(vecs)
        strict = np.zeros((k, k), dtype=bool)
        weak = np.zeros((k, k), dtype=bool)
        for i, u in enumerate(vecs):
            for j, v in enumerate(vecs):
                strict[i, j] = core.strictly_dominates(u, v)
                weak[i, j] = core.weakly_dominates(u, v)
        assert not strict.diagonal().any()
        assert weak.diagonal().all()
        # transitivity: strict closed under composition
        closure = strict @ strict
        assert not np.any(closure & ~strict)
        # antisymmetry of the weak relation on distinct vectors
        both = weak & weak.T
        assert np.array_equal(both, np.eye(k, dtype=bool))

    def test_momm_images_mutually_nondominated(self):
        # Every bitstring is optimal for mOneMinMax, so no image may
        # strictly dominate another.  Exhaustive for n=8, m=4.
        bench = MommBenchmark(8, 4)
        bits = np.array(
            [[int(b) for b in format(x, "08b")] for x in range(256)],
            dtype=np.uint8,
        )
        objs = bench.evaluate_matrix(bits)
        ge = np.all(objs[:, None, :] >= objs[None, :, :], axis=2)
        gt = np.any(objs[:, None, :] > objs[None, :, :], axis=2)
        assert not np.any(ge & gt)


class TestHamming:
    @pytest.mark.parametrize(
        "a,b,d",
        [("0000", "0000", 0), ("0101", "1010", 4), ("110", "100", 1)],
    )
    def test_examples(self, a, b, d):
        assert core.hamming_distance(a, b) == d

    def test_mismatched_lengths(self):
        with pytest.raises(ValueError):
            core.hamming_distance("01", "011")

    def test_symmetry(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            a, b = random_bits(rng, 2, 17)
            assert core.hamming_distance(a, b) == core.hamming_distance(b, a)


class TestBitString:
    def test_from_string_and_sequence_agree(self):
        assert core.BitString("1100") == core.BitString([1, 1, 0, 0])
        assert str(core.BitString("1100")) == "1100"

    def test_rejects_non_binary(self):
        for bad in ([0, 2], [0, -1], [0.5, 0], "10x1"):
            with pytest.raises(ValueError):
                core.BitString(bad)

    def test_immutable(self):
        s = core.BitString("101")
        with pytest.raises(ValueError):
            s.bits[0] = 0

    def test_hash_and_len(self):
        assert len(core.BitString("10101")) == 5
        assert {core.BitString("01"), core.BitString([0, 1])} == {core.BitString("01")}

    def test_defensive_copy_of_source(self):
        src = np.array([1, 0, 1], dtype=np.uint8)
        s = core.BitString(src)
        src[0] = 0
        assert str(s) == "101"


class TestObjectiveVector:
    def test_roundtrip(self):
        v = core.ObjectiveVector((3, 0, 2))
        assert v.as_tuple() == (3, 0, 2)
        assert len(v) == 3

    def test_rejects_negative_and_fractional(self):
        with pytest.raises(ValueError):
            core.ObjectiveVector((1, -1))
        with pytest.raises(ValueError):
            core.ObjectiveVector((1.5, 0))

    def test_integral_floats_accepted(self):
        assert core.ObjectiveVector((2.0, 3.0)).as_tuple() == (2, 3)

    def test_equality_and_hash(self):
        assert core.ObjectiveVector((1, 2)) == core.ObjectiveVector([1, 2])
        assert hash(core.ObjectiveVector((1, 2))) == hash(core.ObjectiveVector((1, 2)))
        assert core.ObjectiveVector((1, 2)) != core.ObjectiveVector((2, 1))


class TestIndividual:
    def test_evaluated_matches_benchmark(self):
        bench = MommBenchmark(4, 2)
        ind = core.Individual.evaluated(core.BitString("1100"), bench)
        assert ind.objectives.as_tuple() == (2, 2)
        assert ind.crowding == 0.0

    def test_crowding_is_mutable(self):
        bench = MommBenchmark(4, 2)
        ind = core.Individual.evaluated(core.BitString("0000"), bench)
        ind.crowding = float("inf")
        assert ind.crowding == float("inf")


class TestPopulationMatrix:
    def test_accepts_arrays_vectors_and_individuals(self):
        bench = MommBenchmark(4, 2)
        inds = [core.Individual.evaluated(core.BitString(s), bench) for s in ("0011", "1111")]
        a = core.population_matrix(inds)
        b = core.population_matrix([i.objectives for i in inds])
        c = core.population_matrix([[2, 2], [0, 4]])
        assert np.array_equal(a, b)
        assert np.array_equal(a, c)
        assert a.dtype == np.int64

    def test_rejects_empty_and_ragged(self):
        with pytest.raises(ValueError):
            core.population_matrix([])
        with pytest.raises(ValueError):
            core.population_matrix([[1, 2], [1, 2, 3]])
