"""The generational NSGA-II loop and the steady-state SEMO/GSEMO loop.

Both engines are single-threaded, own their populations as raw numpy
matrices, and are fully deterministic given their seed. One PCG64 generator
(``numpy.random.default_rng(seed)``) drives a run, consumed in a fixed,
documented order:

* NSGA-II, per iteration: parent permutation; crossover pair gates, then
  cut points (when crossover is on); mutation draws; survival tie-breaks.
* SEMO/GSEMO, per iteration: parent pick, then mutation draws.

Identical configs and seeds therefore produce bit-identical traces and
final populations within one build of the library. Cross-version
bit-identity of numpy's generator is not promised.

Traces carry one record per executed iteration plus a leading record for
the initial population, so stagnation plots include the random-init
baseline. In the iteration-0 record the combined population does not exist
yet: its coverage is reported as the parent coverage and the positive-
distance count as zero. For SEMO/GSEMO, which have no combined population
and no crowding at all, every record does the same.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .evolution import (
    MUTATION_BITWISE,
    MUTATION_ONE_BIT,
    SurvivalVariant,
    VariationConfig,
    bitwise_mutation_matrix,
    one_bit_mutation_matrix,
    one_point_crossover_matrix,
    survival_indices,
)


class ConfigError(ValueError):
    """Invalid engine configuration, raised before any work starts."""


class EngineStateError(RuntimeError):
    """An operation arrived in the wrong engine lifecycle phase."""


@dataclass(frozen=True)
class NsgaConfig:
    benchmark: object
    population_size: int
    iterations: int
    seed: int
    variation: VariationConfig = field(default_factory=VariationConfig)
    survival: SurvivalVariant = SurvivalVariant.ORIGINAL

    def __post_init__(self):
        try:
            object.__setattr__(self, "survival", SurvivalVariant(self.survival))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.population_size < 2:
            raise ConfigError("population size must be at least 2")
        if self.variation.crossover != "off" and self.population_size % 2 != 0:
            raise ConfigError("crossover pairing requires an even population size")
        if self.iterations < 1:
            raise ConfigError("iteration count must be positive")


@dataclass(frozen=True)
class SemoConfig:
    benchmark: object
    max_evaluations: int
    seed: int
    mutation: str = MUTATION_ONE_BIT

    def __post_init__(self):
        if self.mutation not in (MUTATION_ONE_BIT, MUTATION_BITWISE):
            raise ConfigError(f"unknown mutation kind {self.mutation!r}")
        if self.max_evaluations < 1:
            raise ConfigError("evaluation budget must be positive")
        # dense coverage tracking needs one bit per front point
        if self.benchmark.front_size() > 10**8:
            raise ConfigError("front too large for dense coverage tracking")


@dataclass
class RunTrace:
    """Per-iteration coverage and diagnostic counts of one run.

    Parallel arrays indexed by record number: ``iteration`` runs 0..T where
    record 0 describes the initial population. ``evaluations`` counts
    fitness evaluations consumed up to and including that record.
    ``evaluations_to_cover`` is set when the parent population first covers
    the whole front, and None if that never happens.
    """

    iteration: np.ndarray
    coverage_P: np.ndarray
    coverage_R: np.ndarray
    positive_cdis: np.ndarray
    evaluations: np.ndarray
    front_size: int
    evaluations_to_cover: Optional[int] = None

    def __len__(self) -> int:
        return int(self.iteration.size)


@dataclass(frozen=True)
class IterationView:
    """Read-only snapshot handed to observers after each iteration.

    Arrays are frozen and only valid during the callback (engines reuse
    their buffers). ``combined_*`` and ``crowding`` are None in the
    iteration-0 record and for SEMO/GSEMO, which have no combined
    population.
    """

    iteration: int
    parent_bits: np.ndarray
    parent_objs: np.ndarray
    combined_bits: Optional[np.ndarray] = None
    combined_objs: Optional[np.ndarray] = None
    crowding: Optional[np.ndarray] = None


Observer = Callable[[IterationView], Optional[bool]]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class _ObserverMixin:
    def attach_observer(self, callback: Observer) -> None:
        """Register a per-iteration callback; returning True stops the run."""
        if self._started:
            raise EngineStateError("cannot attach an observer to a started engine")
        self._observers.append(callback)

    def _emit(self, view: IterationView) -> bool:
        stop = False
        for callback in self._observers:
            if callback(view):
                stop = True
        return stop


class Nsga2Engine(_ObserverMixin):
    """Generational NSGA-II with fair parent selection.

    Each iteration: every parent is selected exactly once in a uniformly
    random order; optional one-point crossover recombines consecutive pairs;
    mutation produces one offspring per parent; parents and offspring are
    ranked together and the configured survival variant truncates the
    critical front back to N.
    """

    def __init__(self, config: NsgaConfig):
        self.config = config
        self._observers: List[Observer] = []
        self._started = False

    def run(self) -> RunTrace:
        if self._started:
            raise EngineStateError("engine instances are single-use")
        self._started = True

        cfg = self.config
        bench = cfg.benchmark
        n, pop = bench.n, cfg.population_size
        front = bench.front()
        rng = np.random.default_rng(cfg.seed)
        rate = (
            cfg.variation.mutation_rate
            if cfg.variation.mutation_rate is not None
            else 1.0 / n
        )

        records = np.zeros((cfg.iterations + 1, 5), dtype=np.int64)
        evals_to_cover = None

        bits = rng.integers(0, 2, size=(pop, n), dtype=np.uint8)
        objs = bench.evaluate_matrix(bits)
        cov_p = self._coverage(front, objs)
        records[0] = (0, cov_p, cov_p, 0, pop)
        if cov_p == front.size:
            evals_to_cover = pop
        stop = self._observers and self._emit(
            IterationView(0, _freeze(bits.copy()), _freeze(objs.copy()))
        )

        executed = 0
        for t in range(1, cfg.iterations + 1):
            if stop:
                break
            parents = bits[rng.permutation(pop)]
            if cfg.variation.crossover == "one-point":
                parents = one_point_crossover_matrix(
                    parents, cfg.variation.crossover_prob, rng
                )
            if cfg.variation.mutation == MUTATION_ONE_BIT:
                offspring = one_bit_mutation_matrix(parents, rng)
            else:
                offspring = bitwise_mutation_matrix(parents, rate, rng)

            combined_bits = np.concatenate([bits, offspring])
            combined_objs = np.concatenate([objs, bench.evaluate_matrix(offspring)])
            outcome = survival_indices(combined_objs, pop, cfg.survival, rng)

            bits = combined_bits[outcome.kept]
            objs = combined_objs[outcome.kept]
            cov_p = self._coverage(front, objs)
            cov_r = self._coverage(front, combined_objs)
            records[t] = (t, cov_p, cov_r, outcome.positive_count, (t + 1) * pop)
            executed = t
            if evals_to_cover is None and cov_p == front.size:
                evals_to_cover = (t + 1) * pop
            if self._observers:
                stop = self._emit(
                    IterationView(
                        t,
                        _freeze(bits),
                        _freeze(objs),
                        _freeze(combined_bits),
                        _freeze(combined_objs),
                        outcome.distances,
                    )
                )
                # frozen parent arrays are only read from here on; reuse is safe
        rows = records[: executed + 1]
        return RunTrace(
            iteration=rows[:, 0].copy(),
            coverage_P=rows[:, 1].copy(),
            coverage_R=rows[:, 2].copy(),
            positive_cdis=rows[:, 3].copy(),
            evaluations=rows[:, 4].copy(),
            front_size=front.size,
            evaluations_to_cover=evals_to_cover,
        )

    @staticmethod
    def _coverage(front, objs: np.ndarray) -> int:
        keys = front.keys_for(objs)
        if front.size <= 10**6:
            return int(np.count_nonzero(np.bincount(keys, minlength=front.size)))
        return int(np.unique(keys).size)


class SemoEngine(_ObserverMixin):
    """Steady-state SEMO (one-bit mutation) or GSEMO (bitwise mutation).

    Starts from a single uniform random individual. Each iteration mutates
    a uniformly chosen member; the offspring joins unless some member
    strictly dominates it, and on joining every member it weakly dominates
    is dropped. The population therefore stays mutually non-dominated with
    at most one member per objective vector. The run stops at full front
    coverage or when the evaluation budget is spent; the trace is dense
    (one record per evaluation), so the budget also bounds trace memory.
    """

    def __init__(self, config: SemoConfig):
        self.config = config
        self._observers: List[Observer] = []
        self._started = False

    def run(self) -> RunTrace:
        if self._started:
            raise EngineStateError("engine instances are single-use")
        self._started = True

        cfg = self.config
        bench = cfg.benchmark
        n = bench.n
        front = bench.front()
        rng = np.random.default_rng(cfg.seed)
        one_bit = cfg.mutation == MUTATION_ONE_BIT
        rate = 1.0 / n

        capacity = 256
        pop_bits = np.zeros((capacity, n), dtype=np.uint8)
        pop_objs = np.zeros((capacity, bench.m), dtype=np.int64)
        covered = np.zeros(front.size, dtype=bool)

        pop_bits[0] = rng.integers(0, 2, size=n, dtype=np.uint8)
        pop_objs[0] = bench.evaluate_matrix(pop_bits[:1])[0]
        size = 1
        covered[front.keys_for(pop_objs[:1])[0]] = True
        count = 1

        # the initial individual spends the first evaluation, so at most
        # max_evaluations - 1 iterations can run
        records = np.zeros((cfg.max_evaluations, 5), dtype=np.int64)
        records[0] = (0, 1, 1, 0, 1)
        evals_to_cover = 1 if count == front.size else None
        stop = self._observers and self._emit(self._view(0, pop_bits, pop_objs, size))

        t = 0
        while t < cfg.max_evaluations - 1 and evals_to_cover is None and not stop:
            t += 1
            parent = pop_bits[int(rng.integers(size))]
            if one_bit:
                child = parent.copy()
                child[int(rng.integers(n))] ^= 1
            else:
                child = parent ^ (rng.random(n) < rate)
            child_objs = bench.evaluate_matrix(child[None, :])[0]

            current = pop_objs[:size]
            dominated = bool(
                np.any(
                    np.all(current >= child_objs, axis=1)
                    & np.any(current > child_objs, axis=1)
                )
            )
            if not dominated:
                child_key = int(front.keys_for(child_objs[None, :])[0])
                displaced = np.all(current <= child_objs, axis=1)
                if displaced.any():
                    for key in front.keys_for(current[displaced]):
                        if key != child_key:
                            covered[key] = False
                            count -= 1
                    keep = ~displaced
                    kept = int(keep.sum())
                    pop_bits[:kept] = pop_bits[:size][keep]
                    pop_objs[:kept] = pop_objs[:size][keep]
                    size = kept
                if size == capacity:
                    capacity *= 2
                    pop_bits = np.concatenate([pop_bits, np.zeros_like(pop_bits)])
                    pop_objs = np.concatenate([pop_objs, np.zeros_like(pop_objs)])
                pop_bits[size] = child
                pop_objs[size] = child_objs
                size += 1
                if not covered[child_key]:
                    covered[child_key] = True
                    count += 1

            records[t] = (t, count, count, 0, 1 + t)
            if count == front.size:
                evals_to_cover = 1 + t
            if self._observers:
                stop = self._emit(self._view(t, pop_bits, pop_objs, size))

        rows = records[: t + 1]
        return RunTrace(
            iteration=rows[:, 0].copy(),
            coverage_P=rows[:, 1].copy(),
            coverage_R=rows[:, 2].copy(),
            positive_cdis=rows[:, 3].copy(),
            evaluations=rows[:, 4].copy(),
            front_size=front.size,
            evaluations_to_cover=evals_to_cover,
        )

    @staticmethod
    def _view(t: int, pop_bits, pop_objs, size: int) -> IterationView:
        return IterationView(t, _freeze(pop_bits[:size]), _freeze(pop_objs[:size]))


def nsga2_run(config: NsgaConfig, observer: Optional[Observer] = None) -> RunTrace:
    """Run NSGA-II to completion; see :class:`Nsga2Engine`."""
    engine = Nsga2Engine(config)
    if observer is not None:
        engine.attach_observer(observer)
    return engine.run()


def semo_run(config: SemoConfig, observer: Optional[Observer] = None) -> RunTrace:
    """Run SEMO/GSEMO to coverage or budget; see :class:`SemoEngine`."""
    engine = SemoEngine(config)
    if observer is not None:
        engine.attach_observer(observer)
    return engine.run()


def attach_observer(engine, callbacks) -> None:
    """Attach one callback or an iterable of callbacks to an unstarted engine."""
    if callable(callbacks):
        engine.attach_observer(callbacks)
        return
    for callback in callbacks:
        engine.attach_observer(callback)
