"""End-to-end acceptance gate.

Each test is one numbered criterion with its stated tolerance and prints a
single summary line on success (visible with ``pytest -rA``).  Criteria 5-9
run the real experiment sizes, so this module dominates suite runtime
(around ten minutes on one core).
"""

import itertools

import numpy as np

from moolab import reference
from moolab.benchmarks import MommBenchmark, ThreeOmmBenchmark
from moolab.crowding import crowding_distance_matrix, positive_crowding_count
from moolab.engines import NsgaConfig, SemoConfig, nsga2_run, semo_run
from moolab.evolution import VariationConfig
from moolab.harness import ExperimentConfig, run_sweep
from moolab.ranking import non_dominated_sort


def test_criterion_1_deceptive_center_exact_value():
    vectors = [
        (99, 101, 0, 200),
        (101, 99, 0, 200),
        (0, 200, 99, 101),
        (0, 200, 101, 99),
        (100, 100, 100, 100),
    ]
    target = 8.0 / 101.0
    worst = 0.0
    for perm in itertools.permutations(range(5)):
        arr = np.array([vectors[i] for i in perm], dtype=np.int64)
        d = crowding_distance_matrix(arr)
        center = perm.index(4)
        err = abs(d[center] - target)
        worst = max(worst, err)
        assert err <= 1e-12
        assert all(d[j] > d[center] for j in range(5) if j != center)
    print(
        f"ACCEPTANCE 1: PASS - center scored 8/101 in all 120 input orders "
        f"(max error {worst:.2e}), all others strictly larger"
    )


def test_criterion_2_positive_count_caps():
    rng = np.random.default_rng(202)
    cases = [
        (MommBenchmark(40, 4), 168),
        (MommBenchmark(42, 6), 180),
        (ThreeOmmBenchmark(40), 166),
    ]
    details = []
    for bench, cap in cases:
        worst = 0
        for _ in range(200):
            size = int(rng.integers(100, 10001))
            bits = rng.integers(0, 2, size=(size, bench.n), dtype=np.uint8)
            count = positive_crowding_count(bench.evaluate_matrix(bits))
            worst = max(worst, count)
            assert count <= cap
        details.append(f"{bench.label()} max {worst} <= {cap}")
    print(
        "ACCEPTANCE 2: PASS - zero cap violations over 200 populations each: "
        + "; ".join(details)
    )


def test_criterion_3_oracle_equivalence():
    rng = np.random.default_rng(303)
    for _ in range(500):
        size = int(rng.integers(1, 65))
        m = int(rng.choice((2, 3, 4)))
        vecs = rng.integers(0, 6, size=(size, m))
        listed = [tuple(v) for v in vecs]

        got_fronts = [list(f) for f in non_dominated_sort(vecs).fronts]
        assert got_fronts == reference.peel_fronts(listed)

        got_dist = crowding_distance_matrix(vecs).tolist()
        assert got_dist == reference.crowding_reference(listed)
    print(
        "ACCEPTANCE 3: PASS - sorting matches the peeling oracle and "
        "crowding matches the straight-line reference exactly on 500 instances"
    )


def test_criterion_4_zero_removal_invariance():
    rng = np.random.default_rng(404)
    bench = MommBenchmark(40, 4)
    removals = 0
    for _ in range(100):
        size = int(rng.integers(2, 501))
        objs = bench.evaluate_matrix(
            rng.integers(0, 2, size=(size, 40), dtype=np.uint8)
        )
        d = crowding_distance_matrix(objs)
        for z in np.flatnonzero(d == 0.0):
            keep = np.delete(np.arange(size), z)
            assert np.array_equal(crowding_distance_matrix(objs[keep]), d[keep])
            removals += 1
    print(
        f"ACCEPTANCE 4: PASS - {removals} zero-distance removals across 100 "
        f"populations left every other distance bitwise unchanged"
    )


def test_criterion_5_nsga2_stagnation():
    bench = MommBenchmark(40, 4)
    finals = []
    for seed in range(1, 6):
        cfg = NsgaConfig(
            benchmark=bench,
            population_size=1764,
            iterations=1000,
            seed=seed,
            variation=VariationConfig(mutation="bitwise", crossover="off"),
            survival="original",
        )
        trace = nsga2_run(cfg)
        assert np.all(trace.coverage_P < 441), f"seed {seed} covered the front"
        assert trace.coverage_R[-1] < 441
        finals.append((int(trace.coverage_P[-1]), int(trace.coverage_R[-1])))
    print(
        f"ACCEPTANCE 5: PASS - 5/5 runs stayed below 441 at every iteration; "
        f"final (coverage_P, coverage_R): {finals}"
    )


def test_criterion_6_three_objective_band():
    bench = ThreeOmmBenchmark(40)
    finals = []
    for seed in range(1, 11):
        cfg = NsgaConfig(
            benchmark=bench,
            population_size=7056,
            iterations=1000,
            seed=seed,
            variation=VariationConfig(mutation="bitwise", crossover="off"),
            survival="original",
        )
        finals.append(int(nsga2_run(cfg).coverage_R[-1]))
    mean = float(np.mean(finals))
    assert 251.0 <= mean <= 331.0, finals
    print(
        f"ACCEPTANCE 6: PASS - mean final coverage_R {mean:.1f} in [251, 331] "
        f"over 10 runs (finals {finals})"
    )


def test_criterion_7_gsemo_covers_quickly():
    bench = MommBenchmark(40, 4)
    costs = []
    for seed in range(1, 31):
        cfg = SemoConfig(
            benchmark=bench, max_evaluations=500000, seed=seed, mutation="bitwise"
        )
        trace = semo_run(cfg)
        assert trace.evaluations_to_cover is not None, f"seed {seed} ran out of budget"
        assert trace.evaluations_to_cover <= 500000
        assert trace.coverage_P[-1] == 441
        costs.append(trace.evaluations_to_cover)
    mean = float(np.mean(costs))
    assert 4.4e4 <= mean <= 1.8e5, costs
    print(
        f"ACCEPTANCE 7: PASS - 30/30 GSEMO runs covered 441 points; mean "
        f"evaluations {mean:.0f} in [4.4e4, 1.8e5] (min {min(costs)}, max {max(costs)})"
    )


def test_criterion_8_biobjective_positive_control():
    bench = MommBenchmark(40, 2)
    first_hits = []
    for seed in range(1, 11):
        cfg = NsgaConfig(
            benchmark=bench,
            population_size=164,
            iterations=2000,
            seed=seed,
            variation=VariationConfig(mutation="bitwise", crossover="off"),
            survival="original",
        )
        trace = nsga2_run(cfg)
        hit = np.flatnonzero(trace.coverage_P == 41)
        assert hit.size > 0, f"seed {seed} never covered the 41-point front"
        first = int(hit[0])
        assert np.all(trace.coverage_P[first:] == 41), f"seed {seed} lost coverage"
        first_hits.append(first)
    print(
        f"ACCEPTANCE 8: PASS - 10/10 bi-objective runs covered all 41 points "
        f"within 2000 iterations and never dropped (first hit at {first_hits})"
    )


def test_criterion_9_population_sweep_monotonic_but_insufficient(tmp_path):
    cfg = ExperimentConfig(
        benchmark="momm", n=40, m=4, algorithm="nsga2",
        pop_size=None, iterations=1000, repetitions=10, base_seed=1,
        mutation="bitwise", crossover="off", survival="original",
        out_dir=str(tmp_path),
    )
    rows = run_sweep(cfg, (4.0, 16.0, 64.0))
    means = [row["final_coverage_P_mean"] for row in rows]
    sizes = [row["pop_size"] for row in rows]
    assert sizes == [1764, 7056, 28224]
    assert means[0] < means[1] < means[2], means
    assert all(mean < 441.0 for mean in means)
    print(
        f"ACCEPTANCE 9: PASS - mean final coverage_P strictly increases with N "
        f"{sizes} -> {[f'{mean:.1f}' for mean in means]}, all below 441"
    )
