"""Shared builders for the test suite.

Most tests need random populations whose objective vectors are real
benchmark images (so they are mutually non-dominated by construction)
or small integer vector sets with several dominance layers.
"""

import numpy as np

from moolab import benchmarks


def random_bits(rng, size, n):
    return rng.integers(0, 2, size=(size, n), dtype=np.uint8)


def momm_images(rng, size, n=40, m=4):
    """Objective matrix of `size` random bitstrings under mOneMinMax."""
    bench = benchmarks.MommBenchmark(n, m)
    return bench.evaluate_matrix(random_bits(rng, size, n))


def threeomm_images(rng, size, n=40):
    bench = benchmarks.ThreeOmmBenchmark(n)
    return bench.evaluate_matrix(random_bits(rng, size, n))


def layered_vectors():
    """Ten bi-objective vectors with known fronts of sizes 3, 4, 3.

    Front 1: (10,12),(11,11),(12,10)
    Front 2: ( 9,12),(10,11),(11,10),(12, 9)   each beaten by front 1
    Front 3: ( 8,10),( 9, 9),(10, 8)           each beaten by front 2
    """
    return np.array(
        [
            [10, 12], [11, 11], [12, 10],
            [9, 12], [10, 11], [11, 10], [12, 9],
            [8, 10], [9, 9], [10, 8],
        ],
        dtype=np.int64,
    )


LAYER_SIZES = (3, 4, 3)
