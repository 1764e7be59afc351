"""Why crowding distance misjudges diversity beyond two objectives.

The operator sorts each objective independently and sums normalized gaps
between sort neighbors. With two objectives the sorts are mirror images of
each other, so gap sums reflect true spacing. With four objectives a point
can be mid-pack in every sort yet be the only witness of a whole region.

The five-vector set below is the canonical demonstration: the center point
(100, 100, 100, 100) sits far from the two extreme pairs, but each sorted
objective sees it wedged between values 99 and 101, so its distance is a
tiny 8/101 while the redundant extremes score higher.
"""

import numpy as np

from moolab import crowding_distance_matrix, positive_count_bound, positive_crowding_count
from moolab.benchmarks import MommBenchmark

vectors = np.array(
    [
        [99, 101, 0, 200],
        [101, 99, 0, 200],
        [0, 200, 99, 101],
        [0, 200, 101, 99],
        [100, 100, 100, 100],
    ]
)

print("deceptive five-vector set (maximization, 4 objectives):")
distances = crowding_distance_matrix(vectors)
for row, dist in zip(vectors, distances):
    tag = "  <- unique witness of its region" if tuple(row) == (100,) * 4 else ""
    print(f"  {tuple(row)}: {dist:.6f}{tag}")
print(f"\ncenter value is exactly 8/101 = {8 / 101!r}")
print("any selection keyed on these distances will sacrifice the center first.\n")

# The flip side is a hard cap: per objective, at most two individuals per
# distinct value can collect a positive gap term, so no matter how large
# the population grows, the number of positive distances stays bounded.
bench = MommBenchmark(40, 4)
cap = positive_count_bound([bench.n_prime + 1] * bench.m)
print(f"4-objective OneMinMax, n=40: front size {bench.front_size()}, "
      f"positive-distance cap {cap}")
print(f"{'population':>12} {'positive distances':>20}")
rng = np.random.default_rng(1)
for size in (100, 500, 2500, 12500):
    objs = bench.evaluate_matrix(rng.integers(0, 2, size=(size, 40), dtype=np.uint8))
    print(f"{size:>12} {positive_crowding_count(objs):>20}")
print("\neverything beyond the cap ties at distance zero; survival selection")
print("among those individuals is a coin flip regardless of what they cover.")
