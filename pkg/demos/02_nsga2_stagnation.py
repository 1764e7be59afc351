"""NSGA-II stalls on 4-objective OneMinMax even with a generous population.

Every bitstring is Pareto-optimal here, so the only job is spreading the
population across all M front points. The run below gives NSGA-II four
times M individuals; it still plateaus well short of full coverage because
only a bounded number of individuals ever carry a positive crowding
distance, and the zero-distance majority is truncated blindly.

A scaled-down instance keeps this demo quick; the effect is the same at
the reference size (n=40, front 441), just slower to print.
"""

import numpy as np

from moolab.benchmarks import MommBenchmark
from moolab.engines import NsgaConfig, nsga2_run
from moolab.evolution import VariationConfig

bench = MommBenchmark(16, 4)  # front: 9*9 = 81 points
pop = 4 * bench.front_size()
cfg = NsgaConfig(
    benchmark=bench,
    population_size=pop,
    iterations=400,
    seed=11,
    variation=VariationConfig(mutation="bitwise", crossover="off"),
    survival="original",
)

print(f"benchmark {bench.label()}: front size M = {bench.front_size()}")
print(f"NSGA-II, N = 4M = {pop}, bitwise mutation, original survival\n")
trace = nsga2_run(cfg)

print(f"{'iteration':>10} {'coverage_P':>11} {'coverage_R':>11} {'positive_cdis':>14}")
for t in (0, 5, 10, 25, 50, 100, 200, 300, 400):
    print(f"{t:>10} {trace.coverage_P[t]:>11} {trace.coverage_R[t]:>11} "
          f"{trace.positive_cdis[t]:>14}")

peak = int(trace.coverage_P.max())
print(f"\npeak parent coverage {peak} of {trace.front_size}; "
      f"never covered: {trace.evaluations_to_cover is None}")
print("coverage_R counts the parent+offspring pool before truncation, so the")
print("gap between coverage_R and coverage_P is what selection throws away")
print("every single generation.")
