"""Command-line interface: run | sweep | scatter | verify.

Configuration merges in precedence order: built-in defaults, then a named
--preset, then a --config JSON file, then explicit flags. Exit status is 0
on success, 1 when a verify check fails, 2 for usage or configuration
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields

import numpy as np

from .crowding import crowding_distance
from .engines import ConfigError
from .harness import (
    PRESET_EXTRAS,
    PRESETS,
    ExperimentConfig,
    default_scatter_coords,
    run_experiment,
    run_scatter,
    run_sweep,
)
from .verification import run_verify

_FLAG_TO_FIELD = {
    "benchmark": "benchmark",
    "n": "n",
    "m": "m",
    "algorithm": "algorithm",
    "pop_size": "pop_size",
    "pop_mult": "pop_mult",
    "iters": "iterations",
    "reps": "repetitions",
    "seed": "base_seed",
    "survival": "survival",
    "mutation": "mutation",
    "crossover": "crossover",
    "crossover_prob": "crossover_prob",
    "out": "out_dir",
    "workers": "workers",
}


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON config file")
    parser.add_argument("--preset", choices=sorted(PRESETS), help="named experiment setup")
    parser.add_argument("--benchmark", choices=["momm", "3omm"])
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--algorithm", choices=["nsga2", "semo", "gsemo"])
    parser.add_argument("--pop-size", type=int, dest="pop_size")
    parser.add_argument(
        "--pop-mult", type=float, dest="pop_mult",
        help="population size as a multiple of the front size M",
    )
    parser.add_argument("--iters", type=int, help="iterations (evaluation budget for semo/gsemo)")
    parser.add_argument("--reps", type=int)
    parser.add_argument("--seed", type=int, help="base seed; repetition r uses seed+r")
    parser.add_argument("--survival", choices=["original", "sequential"])
    parser.add_argument("--mutation", choices=["one-bit", "bitwise"])
    parser.add_argument("--crossover", choices=["off", "one-point"])
    parser.add_argument("--crossover-prob", type=float, dest="crossover_prob")
    parser.add_argument("--out", metavar="DIR")
    parser.add_argument("--workers", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moolab",
        description="Multi-objective EA experiments on OneMinMax-family benchmarks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one experiment (repetitions + traces + summary)")
    _add_config_flags(run_p)

    sweep_p = sub.add_parser("sweep", help="run a population-size sweep and aggregate finals")
    _add_config_flags(sweep_p)
    sweep_p.add_argument(
        "--multipliers", default=None,
        help="comma-separated population multipliers, e.g. 4,16,64,256",
    )

    scatter_p = sub.add_parser("scatter", help="dump objective scatter sets at one iteration")
    _add_config_flags(scatter_p)
    scatter_p.add_argument("--at", type=int, default=None, help="iteration to capture")
    scatter_p.add_argument(
        "--coords", default=None, help="1-based objective pair, e.g. 2,4"
    )

    verify_p = sub.add_parser("verify", help="run the built-in self-checks")
    verify_p.add_argument(
        "--vectors", metavar="PATH",
        help="instead: read comma-separated objective vectors (one per line) "
        "and print their crowding distances",
    )
    verify_p.add_argument("--seed", type=int, default=1)
    return parser


def _merge_config(args: argparse.Namespace) -> ExperimentConfig:
    merged = {f.name: f.default for f in fields(ExperimentConfig)}
    if args.preset:
        merged.update(PRESETS[args.preset])
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - set(merged)
        if unknown:
            raise ConfigError(f"unknown config keys in {args.config}: {sorted(unknown)}")
        merged.update(data)
    for flag, field_name in _FLAG_TO_FIELD.items():
        value = getattr(args, flag, None)
        if value is not None:
            merged[field_name] = value
    return ExperimentConfig.from_dict(merged)


def _parse_pair(text: str, flag: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ConfigError(f"{flag} expects two comma-separated integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def _cmd_run(args) -> int:
    result = run_experiment(_merge_config(args))
    print(f"wrote {len(result.repetition_results)} trace file(s) to {result.out_dir}")
    print(f"front_size: {result.front_size}")
    print(f"final_coverage_P.mean: {result.coverage_P_stats.mean}")
    print(f"final_coverage_R.mean: {result.coverage_R_stats.mean}")
    print(f"summary: {result.summary_path}")
    return 0


def _cmd_sweep(args) -> int:
    config = _merge_config(args)
    if args.multipliers is not None:
        multipliers = [float(p) for p in args.multipliers.split(",") if p.strip()]
    else:
        extras = PRESET_EXTRAS.get(args.preset or "", {})
        multipliers = list(extras.get("multipliers", ()))
    if not multipliers:
        raise ConfigError("sweep needs --multipliers (or a preset that provides them)")
    rows = run_sweep(config, multipliers)
    for row in rows:
        print(
            f"multiplier {row['multiplier']:g} (N={row['pop_size']}): "
            f"coverage_P {row['final_coverage_P_mean']:.2f} +- {row['final_coverage_P_std']:.2f}, "
            f"coverage_R {row['final_coverage_R_mean']:.2f} +- {row['final_coverage_R_std']:.2f}"
        )
    print(f"wrote {config.out_dir}/sweep.csv")
    return 0


def _cmd_scatter(args) -> int:
    config = _merge_config(args)
    extras = PRESET_EXTRAS.get(args.preset or "", {})
    at = args.at if args.at is not None else extras.get("at")
    coords = (
        _parse_pair(args.coords, "--coords")
        if args.coords is not None
        else extras.get("coords")
    )
    result = run_scatter(config, at, coords)
    print(
        f"captured iteration {result.at_iteration} at coordinates "
        f"f{result.coords[0]},f{result.coords[1]}: "
        f"{result.rows_R} R rows, {result.rows_positive} positive_cdis rows, "
        f"{result.rows_P_next} P_next rows"
    )
    print(f"wrote {result.path}")
    return 0


def _read_vector_file(path: str) -> list:
    vectors = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                vectors.append([int(p) for p in text.split(",")])
            except ValueError:
                raise ConfigError(f"{path}:{line_no}: not a comma-separated integer vector")
    if not vectors:
        raise ConfigError(f"{path}: no vectors found")
    if len({len(v) for v in vectors}) != 1:
        raise ConfigError(f"{path}: vectors have inconsistent lengths")
    return vectors


def _cmd_verify(args) -> int:
    if args.vectors:
        vectors = _read_vector_file(args.vectors)
        assignment = crowding_distance(np.array(vectors, dtype=np.int64))
        for vec, dist in zip(vectors, assignment.distances):
            print(f"{','.join(str(v) for v in vec)}\t{dist}")
        print(f"positive_count: {assignment.positive_count}")
        return 0
    results = run_verify(args.seed)
    failed = 0
    for check in results:
        status = "PASS" if check.passed else "FAIL"
        failed += not check.passed
        print(f"{status} {check.name}: {check.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "sweep": _cmd_sweep,
        "scatter": _cmd_scatter,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
