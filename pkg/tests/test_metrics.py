"""Coverage accounting, neighbor enumeration, summary statistics."""

import statistics

import numpy as np
import pytest

from moolab.benchmarks import MommBenchmark, ThreeOmmBenchmark, enumerate_front
from moolab.metrics import CoverageCounter, SummaryStats, coverage, neighbors, summarize

from conftest import random_bits


class TestCoverage:
    def test_canonical_count(self):
        # n=8, m=4 has a 25-point front; the all-zeros and all-ones
        # strings hit two distinct points.
        bench = MommBenchmark(8, 4)
        desc = bench.front()
        pop = bench.evaluate_matrix(
            np.array([[0] * 8, [1] * 8], dtype=np.uint8)
        )
        assert coverage(pop, desc) == 2

    def test_duplicates_do_not_double_count(self):
        bench = MommBenchmark(8, 4)
        desc = bench.front()
        row = bench.evaluate_matrix(np.zeros((1, 8), dtype=np.uint8))
        pop = np.repeat(row, 7, axis=0)
        assert coverage(pop, desc) == 1

    def test_full_population_covers_everything(self):
        bench = MommBenchmark(8, 4)
        bits = np.array(
            [[int(b) for b in format(x, "08b")] for x in range(256)],
            dtype=np.uint8,
        )
        assert coverage(bench.evaluate_matrix(bits), bench.front()) == 25

    def test_empty_population_covers_nothing(self):
        assert coverage([], MommBenchmark(8, 4).front()) == 0

    def test_foreign_vectors_rejected(self):
        # images of one benchmark are not valid points of another
        momm = MommBenchmark(8, 4)
        with pytest.raises(ValueError):
            coverage(momm.evaluate_matrix(random_bits(np.random.default_rng(0), 5, 8)),
                     ThreeOmmBenchmark(6).front())


class TestCoverageCounter:
    def test_incremental_matches_batch(self):
        rng = np.random.default_rng(61)
        bench = MommBenchmark(12, 4)
        desc = bench.front()
        counter = CoverageCounter(desc)
        seen = []
        for _ in range(6):
            pop = bench.evaluate_matrix(random_bits(rng, 30, 12))
            seen.append(pop)
            got = counter.add(pop)
            assert got == coverage(np.concatenate(seen), desc)
        assert counter.count == got

    def test_add_vector_and_covered(self):
        desc = MommBenchmark(4, 2).front()
        counter = CoverageCounter(desc)
        assert counter.add_vector((0, 4)) == 1
        assert counter.add_vector((0, 4)) == 1
        assert counter.add_vector((4, 0)) == 2
        mask = counter.covered
        assert mask.sum() == 2
        mask[:] = False  # a copy: must not corrupt the counter
        assert counter.count == 2


class TestNeighbors:
    def test_interior_point(self):
        desc = MommBenchmark(8, 4).front()
        got = [tuple(v) for v in neighbors((2, 2, 1, 3), desc)]
        assert got == [
            (1, 3, 1, 3), (3, 1, 1, 3), (2, 2, 0, 4), (2, 2, 2, 2),
        ]

    def test_corner_point(self):
        desc = MommBenchmark(8, 4).front()
        got = [tuple(v) for v in neighbors((0, 4, 0, 4), desc)]
        assert got == [(1, 3, 0, 4), (0, 4, 1, 3)]

    def test_3omm_point(self):
        desc = ThreeOmmBenchmark(8).front()
        got = [tuple(v) for v in neighbors((4, 2, 2), desc)]
        assert got == [(5, 1, 2), (3, 3, 2), (5, 2, 1), (3, 2, 3)]

    def test_membership_validated(self):
        desc = MommBenchmark(8, 4).front()
        with pytest.raises(ValueError):
            neighbors((2, 2, 1, 4), desc)

    def test_symmetry_and_degree_exhaustive(self):
        # u is a neighbor of v iff v is a neighbor of u; degree lies in
        # [m/2, m] for momm and [2, 4] for 3omm.
        for bench, lo, hi in (
            (MommBenchmark(8, 4), 2, 4),
            (ThreeOmmBenchmark(8), 2, 4),
            (MommBenchmark(6, 2), 1, 2),
        ):
            desc = bench.front()
            pts = [tuple(p) for p in enumerate_front(desc)]
            table = {p: {tuple(q) for q in neighbors(p, desc)} for p in pts}
            for p, nbrs in table.items():
                assert lo <= len(nbrs) <= hi
                for q in nbrs:
                    assert p in table[q]


class TestSummarize:
    def test_constant_sequence(self):
        s = summarize([5.0, 5.0, 5.0])
        assert s == SummaryStats(5.0, 0.0, 5.0, 5.0)

    def test_two_values(self):
        s = summarize([0.0, 10.0])
        assert (s.mean, s.std, s.min, s.max) == (5.0, 5.0, 0.0, 10.0)

    def test_matches_statistics_module(self):
        rng = np.random.default_rng(62)
        values = rng.normal(3.0, 2.0, size=40).tolist()
        s = summarize(values)
        assert s.mean == pytest.approx(statistics.fmean(values), rel=1e-12)
        assert s.std == pytest.approx(statistics.pstdev(values), rel=1e-12)
        assert s.min == min(values) and s.max == max(values)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            summarize([])

    def test_accepts_integer_inputs(self):
        s = summarize(np.arange(1, 6))
        assert (s.mean, s.min, s.max) == (3.0, 1.0, 5.0)
