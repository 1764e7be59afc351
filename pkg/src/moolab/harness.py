"""Experiment orchestration: configs, repetition fan-out, CSV persistence.

One :class:`ExperimentConfig` describes a whole experiment; repetition r
always runs with seed ``base_seed + r``, so any repetition can be reproduced
in isolation and results do not depend on whether repetitions execute
serially or across worker processes.

Files written into the output directory:

* ``trace_rep###.csv`` per repetition, header
  ``iteration,coverage_P,coverage_R,positive_cdis,evaluations``, one row per
  executed iteration plus the iteration-0 row.
* ``config.json``: the effective configuration; feeding it back through
  ``--config`` reproduces identical outputs.
* ``summary.txt``: ``key: value`` lines with a ``config.`` echo and summary
  statistics of the final coverage values.
* ``sweep.csv`` (sweeps): one aggregate row per population multiplier.
* ``scatter.csv`` (scatter dumps): ``f2,f4,set`` rows for the combined
  population R, its positive-crowding-distance subset, and the selected
  next parent population at the requested iteration.

All CSV output is UTF-8 with LF line endings.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Optional, Sequence

from .benchmarks import benchmark_from_id
from .engines import (
    ConfigError,
    NsgaConfig,
    RunTrace,
    SemoConfig,
    nsga2_run,
    semo_run,
)
from .evolution import VariationConfig
from .metrics import SummaryStats, summarize

TRACE_HEADER = ["iteration", "coverage_P", "coverage_R", "positive_cdis", "evaluations"]

ALGORITHMS = ("nsga2", "semo", "gsemo")

# reference experiment setups: 4-objective OneMinMax at n=40 (front size 441)
# with fair selection, bitwise mutation, no crossover, original survival;
# the 3-objective variant at N=16M; GSEMO on the same 4-objective instance
PRESETS = {
    "paper-fig1": dict(
        benchmark="momm", n=40, m=4, algorithm="nsga2", pop_mult=4.0,
        iterations=1000, repetitions=1, mutation="bitwise", crossover="off",
        survival="original",
    ),
    "paper-fig2": dict(
        benchmark="momm", n=40, m=4, algorithm="nsga2", pop_mult=4.0,
        iterations=1000, repetitions=10, mutation="bitwise", crossover="off",
        survival="original",
    ),
    "paper-fig3": dict(
        benchmark="momm", n=40, m=4, algorithm="nsga2", pop_mult=4.0,
        iterations=1000, repetitions=1, mutation="bitwise", crossover="off",
        survival="original",
    ),
    "paper-3omm": dict(
        benchmark="3omm", n=40, algorithm="nsga2", pop_mult=16.0,
        iterations=1000, repetitions=10, mutation="bitwise", crossover="off",
        survival="original",
    ),
    "paper-gsemo": dict(
        benchmark="momm", n=40, m=4, algorithm="gsemo",
        iterations=500_000, repetitions=30,
    ),
}

# sweep/scatter parameters that go with a preset but sit outside the config
PRESET_EXTRAS = {
    "paper-fig2": dict(multipliers=(4.0, 16.0, 64.0, 256.0)),
    "paper-fig3": dict(at=1000, coords=(2, 4)),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to reproduce one experiment.

    ``pop_size`` wins over ``pop_mult`` (N = round(pop_mult * M)) when both
    are set. ``iterations`` is the evaluation budget for semo/gsemo.
    ``mutation=None`` resolves to bitwise for nsga2/gsemo and one-bit for
    semo.
    """

    benchmark: str = "momm"
    n: int = 40
    m: int = 4
    algorithm: str = "nsga2"
    pop_size: Optional[int] = None
    pop_mult: Optional[float] = 4.0
    iterations: int = 1000
    repetitions: int = 10
    base_seed: int = 1
    survival: str = "original"
    mutation: Optional[str] = None
    crossover: str = "off"
    crossover_prob: float = 0.9
    out_dir: str = "runs"
    workers: int = 1

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}, expected {ALGORITHMS}")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be positive")
        if self.workers < 1:
            raise ConfigError("worker count must be positive")
        self.resolved_benchmark()  # fail fast on bad benchmark parameters

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)

    def resolved_benchmark(self):
        m = self.m if self.benchmark == "momm" else None
        try:
            return benchmark_from_id(self.benchmark, self.n, m)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def resolved_pop_size(self) -> int:
        if self.pop_size is not None:
            return int(self.pop_size)
        if self.pop_mult is not None:
            front_size = self.resolved_benchmark().front_size()
            return int(round(self.pop_mult * front_size))
        raise ConfigError("nsga2 needs pop_size or pop_mult")

    def resolved_mutation(self) -> str:
        if self.mutation is not None:
            return self.mutation
        return "one-bit" if self.algorithm == "semo" else "bitwise"

    def engine_config(self, rep: int):
        """The per-repetition engine config, with seed base_seed + rep."""
        bench = self.resolved_benchmark()
        seed = self.base_seed + rep
        if self.algorithm == "nsga2":
            variation = VariationConfig(
                mutation=self.resolved_mutation(),
                crossover=self.crossover,
                crossover_prob=self.crossover_prob,
            )
            return NsgaConfig(
                benchmark=bench,
                population_size=self.resolved_pop_size(),
                iterations=self.iterations,
                seed=seed,
                variation=variation,
                survival=self.survival,
            )
        return SemoConfig(
            benchmark=bench,
            max_evaluations=self.iterations,
            seed=seed,
            mutation=self.resolved_mutation(),
        )


def write_trace_csv(path, trace: RunTrace) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        writer.writerows(
            zip(
                trace.iteration.tolist(),
                trace.coverage_P.tolist(),
                trace.coverage_R.tolist(),
                trace.positive_cdis.tolist(),
                trace.evaluations.tolist(),
            )
        )


def _trace_path(out_dir: Path, rep: int) -> Path:
    return out_dir / f"trace_rep{rep:03d}.csv"


def _run_repetition(config_dict: dict, rep: int) -> dict:
    """Run one repetition and persist its trace; top level so workers can pickle it."""
    cfg = ExperimentConfig.from_dict(config_dict)
    engine_cfg = cfg.engine_config(rep)
    trace = nsga2_run(engine_cfg) if cfg.algorithm == "nsga2" else semo_run(engine_cfg)
    path = _trace_path(Path(cfg.out_dir), rep)
    write_trace_csv(path, trace)
    return dict(
        rep=rep,
        final_coverage_P=int(trace.coverage_P[-1]),
        final_coverage_R=int(trace.coverage_R[-1]),
        evaluations_to_cover=trace.evaluations_to_cover,
        records=len(trace),
        front_size=trace.front_size,
        trace_path=str(path),
    )


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    front_size: int
    repetition_results: list
    coverage_P_stats: SummaryStats
    coverage_R_stats: SummaryStats
    out_dir: str
    summary_path: str


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute all repetitions, write traces, config echo, and summary."""
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    config_dict = config.to_dict()
    with open(out_dir / "config.json", "w", encoding="utf-8") as fh:
        json.dump(config_dict, fh, indent=2, sort_keys=True)
        fh.write("\n")

    reps = range(config.repetitions)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_repetition, [config_dict] * len(reps), reps))
    else:
        results = [_run_repetition(config_dict, rep) for rep in reps]

    front_size = results[0]["front_size"]
    cov_p = summarize([r["final_coverage_P"] for r in results])
    cov_r = summarize([r["final_coverage_R"] for r in results])
    summary_path = out_dir / "summary.txt"
    _write_summary(summary_path, config, front_size, results, cov_p, cov_r)
    return ExperimentResult(
        config=config,
        front_size=front_size,
        repetition_results=results,
        coverage_P_stats=cov_p,
        coverage_R_stats=cov_r,
        out_dir=str(out_dir),
        summary_path=str(summary_path),
    )


def _write_summary(path, config, front_size, results, cov_p, cov_r) -> None:
    lines = []
    for key, value in sorted(config.to_dict().items()):
        lines.append(f"config.{key}: {json.dumps(value)}")
    lines.append(f"front_size: {front_size}")
    if config.algorithm == "nsga2":
        lines.append(f"resolved_pop_size: {config.resolved_pop_size()}")
    lines.append(f"resolved_mutation: {config.resolved_mutation()}")
    lines.append(f"repetitions_executed: {len(results)}")
    for name, stats in (("final_coverage_P", cov_p), ("final_coverage_R", cov_r)):
        lines.append(f"{name}.mean: {stats.mean}")
        lines.append(f"{name}.std: {stats.std}")
        lines.append(f"{name}.min: {stats.min}")
        lines.append(f"{name}.max: {stats.max}")
    covered = [
        r["evaluations_to_cover"] for r in results if r["evaluations_to_cover"] is not None
    ]
    lines.append(f"covered_runs: {len(covered)}")
    if covered:
        ev = summarize(covered)
        lines.append(f"evaluations_to_cover.mean: {ev.mean}")
        lines.append(f"evaluations_to_cover.std: {ev.std}")
        lines.append(f"evaluations_to_cover.min: {ev.min}")
        lines.append(f"evaluations_to_cover.max: {ev.max}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


SWEEP_HEADER = [
    "multiplier",
    "pop_size",
    "final_coverage_P_mean",
    "final_coverage_P_std",
    "final_coverage_R_mean",
    "final_coverage_R_std",
]


def run_sweep(config: ExperimentConfig, multipliers: Sequence[float]) -> list:
    """Run one experiment per population multiplier and aggregate the finals."""
    if config.algorithm != "nsga2":
        raise ConfigError("population sweeps only apply to nsga2")
    if not multipliers:
        raise ConfigError("sweep needs at least one multiplier")
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    for mult in multipliers:
        label = f"{mult:g}".replace(".", "p")
        sub = replace(
            config,
            pop_mult=float(mult),
            pop_size=None,
            out_dir=str(out_dir / f"mult{label}"),
        )
        result = run_experiment(sub)
        rows.append(
            dict(
                multiplier=float(mult),
                pop_size=sub.resolved_pop_size(),
                final_coverage_P_mean=result.coverage_P_stats.mean,
                final_coverage_P_std=result.coverage_P_stats.std,
                final_coverage_R_mean=result.coverage_R_stats.mean,
                final_coverage_R_std=result.coverage_R_stats.std,
            )
        )
    with open(out_dir / "sweep.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return rows


def default_scatter_coords(m: int) -> tuple:
    """The ones-counting pair (f2, f4) when it exists, else the last two."""
    if m >= 4:
        return (2, 4)
    return (m - 1, m)


@dataclass
class ScatterResult:
    path: str
    at_iteration: int
    coords: tuple
    rows_R: int
    rows_positive: int
    rows_P_next: int


def run_scatter(
    config: ExperimentConfig,
    at_iteration: Optional[int] = None,
    coords: Optional[tuple] = None,
) -> ScatterResult:
    """Dump (f_a, f_b) values of R_t, its positive-distance subset, and P_{t+1}.

    Runs repetition 0 of the config up to the requested iteration and
    captures that iteration's populations. Appears in the output as rows
    tagged R, positive_cdis, and P_next.
    """
    if config.algorithm != "nsga2":
        raise ConfigError("scatter dumps only apply to nsga2")
    at = config.iterations if at_iteration is None else int(at_iteration)
    if not 1 <= at <= config.iterations:
        raise ConfigError(f"scatter iteration {at} outside 1..{config.iterations}")
    bench = config.resolved_benchmark()
    a, b = coords if coords is not None else default_scatter_coords(bench.m)
    if not (1 <= a <= bench.m and 1 <= b <= bench.m):
        raise ConfigError(f"coordinates ({a},{b}) outside 1..{bench.m}")

    captured = {}

    def observer(view):
        if view.iteration == at:
            captured["combined"] = view.combined_objs.copy()
            captured["crowding"] = view.crowding.copy()
            captured["parents"] = view.parent_objs.copy()
            return True
        return None

    nsga2_run(config.engine_config(0), observer)
    if "combined" not in captured:
        raise RuntimeError("run ended before the scatter iteration")

    combined = captured["combined"]
    positive = combined[captured["crowding"] > 0]
    parents = captured["parents"]
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "scatter.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([f"f{a}", f"f{b}", "set"])
        for objs, tag in ((combined, "R"), (positive, "positive_cdis"), (parents, "P_next")):
            for row in objs[:, [a - 1, b - 1]].tolist():
                writer.writerow([row[0], row[1], tag])
    return ScatterResult(
        path=str(path),
        at_iteration=at,
        coords=(a, b),
        rows_R=len(combined),
        rows_positive=len(positive),
        rows_P_next=len(parents),
    )
