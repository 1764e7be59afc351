"""Self-checks behind the ``verify`` CLI subcommand.

Each check re-derives an expected result through an independent route (a
hand-computable population, a brute-force oracle, or an exact invariance)
and compares the library against it. The suite is deterministic, runs in a
few seconds, and any failure reports expected versus actual. The test
suite runs the same properties again at larger scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import reference
from .benchmarks import MommBenchmark, ThreeOmmBenchmark
from .crowding import crowding_distance_matrix, positive_count_bound
from .ranking import non_dominated_sort

# Five pairwise non-dominated vectors with a deceptive crowding assignment:
# (100,100,100,100) is by far the most isolated of the five in objective
# space, yet it gets the smallest distance, exactly 8/101, in every input
# order, while the clustered outer pairs always score infinity.
DECEPTIVE_SET = (
    (99, 101, 0, 200),
    (101, 99, 0, 200),
    (0, 200, 99, 101),
    (0, 200, 101, 99),
    (100, 100, 100, 100),
)
DECEPTIVE_CENTER_DISTANCE = 8 / 101


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_deceptive_distance() -> CheckResult:
    """The center individual scores exactly 8/101 under every input order."""
    base = np.array(DECEPTIVE_SET, dtype=np.int64)
    worst = 0.0
    for perm in itertools.permutations(range(5)):
        dist = crowding_distance_matrix(base[list(perm)])
        center = dist[perm.index(4)]
        others = np.delete(dist, perm.index(4))
        err = abs(center - DECEPTIVE_CENTER_DISTANCE)
        worst = max(worst, err)
        if err > 1e-12 or not np.all(others > center):
            return CheckResult(
                "deceptive-distance",
                False,
                f"expected {DECEPTIVE_CENTER_DISTANCE!r} with all others larger, "
                f"got {center!r} among {dist.tolist()} for order {perm}",
            )
    return CheckResult(
        "deceptive-distance",
        True,
        f"center distance is 8/101 = {DECEPTIVE_CENTER_DISTANCE:.10f} "
        f"in all 120 input orders (max error {worst:.2e})",
    )


def check_positive_bound(seed: int = 1, populations: int = 40) -> CheckResult:
    """Random populations never exceed 2*sum(nu_i) positive distances."""
    rng = np.random.default_rng(seed)
    cases = [
        (MommBenchmark(40, 4), positive_count_bound([21] * 4)),
        (MommBenchmark(42, 6), positive_count_bound([15] * 6)),
        (ThreeOmmBenchmark(40), positive_count_bound([41, 21, 21])),
    ]
    worst = 0
    for bench, bound in cases:
        for _ in range(populations):
            size = int(rng.integers(100, 3001))
            bits = rng.integers(0, 2, size=(size, bench.n), dtype=np.uint8)
            dist = crowding_distance_matrix(bench.evaluate_matrix(bits))
            positives = int(np.count_nonzero(dist > 0))
            worst = max(worst, positives)
            if positives > bound:
                return CheckResult(
                    "positive-count-bound",
                    False,
                    f"{bench.label()}: {positives} positives exceed bound {bound} "
                    f"at population size {size}",
                )
    return CheckResult(
        "positive-count-bound",
        True,
        f"{3 * populations} random populations stayed within their bounds "
        f"(largest count seen: {worst})",
    )


def check_zero_removal(seed: int = 2, populations: int = 25) -> CheckResult:
    """Dropping a zero-distance individual changes no other distance."""
    rng = np.random.default_rng(seed)
    bench = MommBenchmark(40, 4)
    checked = 0
    for _ in range(populations):
        size = int(rng.integers(50, 301))
        objs = bench.evaluate_matrix(
            rng.integers(0, 2, size=(size, bench.n), dtype=np.uint8)
        )
        dist = crowding_distance_matrix(objs)
        for j in np.flatnonzero(dist == 0.0):
            after = crowding_distance_matrix(np.delete(objs, j, axis=0))
            if not np.array_equal(after, np.delete(dist, j)):
                return CheckResult(
                    "zero-removal-invariance",
                    False,
                    f"distances shifted after removing zero-distance row {j} "
                    f"of a size-{size} population",
                )
            checked += 1
    return CheckResult(
        "zero-removal-invariance",
        True,
        f"{checked} zero-distance removals left all other distances bit-identical",
    )


def check_oracle_agreement(seed: int = 3, instances: int = 120) -> CheckResult:
    """Sorting and crowding agree exactly with the brute-force oracles."""
    rng = np.random.default_rng(seed)
    lattice = MommBenchmark(12, 4)
    for _ in range(instances):
        size = int(rng.integers(1, 65))
        m = int(rng.integers(2, 5))
        vectors = rng.integers(0, 6, size=(size, m))
        got = [f.tolist() for f in non_dominated_sort(vectors).fronts]
        want = reference.peel_fronts(vectors.tolist())
        if got != want:
            return CheckResult(
                "oracle-agreement", False, f"front partition mismatch on {vectors.tolist()}"
            )
        # crowding needs a mutually non-dominated set; benchmark images are one
        images = lattice.evaluate_matrix(
            rng.integers(0, 2, size=(size, 12), dtype=np.uint8)
        )
        got_d = crowding_distance_matrix(images).tolist()
        want_d = reference.crowding_reference(images.tolist())
        if got_d != want_d:
            return CheckResult(
                "oracle-agreement", False, f"crowding mismatch on {images.tolist()}"
            )
    return CheckResult(
        "oracle-agreement",
        True,
        f"{instances} random instances matched both oracles exactly",
    )


def run_verify(seed: int = 1) -> list:
    """All checks, deterministic for a given seed."""
    return [
        check_deceptive_distance(),
        check_positive_bound(seed),
        check_zero_removal(seed + 1),
        check_oracle_agreement(seed + 2),
    ]
