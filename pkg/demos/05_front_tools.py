"""Working with Pareto fronts directly: enumeration, indexing, coverage.

Both benchmark families have closed-form fronts: every objective vector is
determined by its free coordinates (one per bi-objective block for
mOneMinMax, the two half counts for 3-OneMinMax). That makes the front
enumerable, and gives every point a dense index that coverage tracking
uses as an array slot.
"""

import numpy as np

from moolab.benchmarks import MommBenchmark, ThreeOmmBenchmark, enumerate_front
from moolab.metrics import CoverageCounter, coverage, neighbors, summarize

momm = MommBenchmark(8, 4)
desc = momm.front()
print(f"{momm.label()}: front size {desc.size}")
points = list(enumerate_front(desc))
print(f"first five points in canonical order: {[tuple(p) for p in points[:5]]}")
print(f"index of (2, 2, 1, 3): {desc.index_of((2, 2, 1, 3))}")
print(f"grid neighbors of (2, 2, 1, 3): "
      f"{[tuple(v) for v in neighbors((2, 2, 1, 3), desc)]}\n")

omm3 = ThreeOmmBenchmark(8)
print(f"{omm3.label()}: front size {omm3.front_size()}")
print(f"corner (8, 0, 0) has neighbors "
      f"{[tuple(v) for v in neighbors((8, 0, 0), omm3.front())]}\n")

# coverage: how much of the front a random population hits
rng = np.random.default_rng(5)
pop = momm.evaluate_matrix(rng.integers(0, 2, size=(60, 8), dtype=np.uint8))
print(f"random population of 60: covers {coverage(pop, desc)}/{desc.size} points")

# incremental accounting across batches, as an engine would do it
counter = CoverageCounter(desc)
counts = [counter.add(momm.evaluate_matrix(
    rng.integers(0, 2, size=(20, 8), dtype=np.uint8))) for _ in range(8)]
print(f"incremental coverage after each of 8 batches of 20: {counts}")

stats = summarize(counts)
print(f"summary of those counts: mean {stats.mean:.1f}, std {stats.std:.2f}, "
      f"range [{stats.min:.0f}, {stats.max:.0f}]")
