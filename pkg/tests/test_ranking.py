"""Non-dominated sorting against the peeling oracle."""

import numpy as np
import pytest

from moolab import ranking, reference
from moolab.ranking import critical_front_index, front_labels, non_dominated_sort

from conftest import LAYER_SIZES, layered_vectors, momm_images


class TestNonDominatedSort:
    def test_frozen_example(self):
        fronts = non_dominated_sort([(3, 3), (2, 2), (3, 1), (1, 3)]).fronts
        assert [list(f) for f in fronts] == [[0], [1, 2, 3]]

    def test_layered_construction(self):
        part = non_dominated_sort(layered_vectors())
        assert part.front_sizes() == list(LAYER_SIZES)
        assert [list(f) for f in part.fronts] == [
            [0, 1, 2], [3, 4, 5, 6], [7, 8, 9],
        ]

    def test_singleton(self):
        part = non_dominated_sort([(5, 1, 2)])
        assert [list(f) for f in part.fronts] == [[0]]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            non_dominated_sort(np.zeros((0, 3), dtype=np.int64))

    def test_duplicates_share_a_front(self):
        vecs = [(2, 2), (3, 3), (2, 2), (3, 3), (1, 1)]
        part = non_dominated_sort(vecs)
        assert [list(f) for f in part.fronts] == [[1, 3], [0, 2], [4]]

    def test_indices_ascending_within_fronts(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            vecs = rng.integers(0, 6, size=(rng.integers(2, 40), 3))
            for f in non_dominated_sort(vecs).fronts:
                assert np.all(np.diff(f) > 0)

    def test_fronts_partition_the_input(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            size = int(rng.integers(1, 50))
            vecs = rng.integers(0, 5, size=(size, 2))
            part = non_dominated_sort(vecs)
            joined = np.sort(np.concatenate(part.fronts))
            assert np.array_equal(joined, np.arange(size))
            assert part.total == size

    def test_benchmark_images_form_one_front(self):
        rng = np.random.default_rng(13)
        objs = momm_images(rng, 120)
        part = non_dominated_sort(objs)
        assert len(part.fronts) == 1

    def test_matches_peeling_oracle(self):
        rng = np.random.default_rng(14)
        for _ in range(150):
            size = int(rng.integers(1, 64))
            m = int(rng.choice((2, 3, 4)))
            vecs = rng.integers(0, 6, size=(size, m))
            got = [list(f) for f in non_dominated_sort(vecs).fronts]
            assert got == reference.peel_fronts([tuple(v) for v in vecs])

    def test_front_labels_agree_with_partition(self):
        rng = np.random.default_rng(15)
        vecs = rng.integers(0, 6, size=(40, 3))
        labels = front_labels(vecs)
        part = non_dominated_sort(vecs)
        for rank, f in enumerate(part.fronts):
            assert np.all(labels[f] == rank)


class TestCriticalFrontIndex:
    def test_layered_cases(self):
        part = non_dominated_sort(layered_vectors())
        assert critical_front_index(part, 3) == 1
        assert critical_front_index(part, 5) == 2
        assert critical_front_index(part, 7) == 2
        assert critical_front_index(part, 8) == 3
        assert critical_front_index(part, 10) == 3

    def test_bounds_validated(self):
        part = non_dominated_sort(layered_vectors())
        for bad in (0, -1, 11):
            with pytest.raises(ValueError):
                critical_front_index(part, bad)

    def test_module_op_agrees_with_method(self):
        part = non_dominated_sort(layered_vectors())
        for keep in range(1, 11):
            assert part.critical_index(keep) == critical_front_index(part, keep)

    def test_single_front_population(self):
        rng = np.random.default_rng(16)
        part = non_dominated_sort(momm_images(rng, 60))
        assert critical_front_index(part, 1) == 1
        assert critical_front_index(part, 60) == 1
