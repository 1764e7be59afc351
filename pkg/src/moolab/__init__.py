"""moolab: multi-objective EAs on OneMinMax-family benchmarks.

A small laboratory around one phenomenon: NSGA-II's crowding distance
treats objectives independently, so on block-structured OneMinMax problems
with three or more objectives only O(n) individuals of an arbitrarily large
population can score positive, survival selection degenerates to uniform
removal, and a constant fraction of the Pareto front is lost. The package
provides the benchmarks, the algorithms (NSGA-II with both survival
variants, SEMO/GSEMO), crowding diagnostics, and a reproducible experiment
harness with a CLI (``moolab run | sweep | scatter | verify``).
"""

from .benchmarks import (
    FrontTooLargeError,
    MommBenchmark,
    ParetoFrontDescriptor,
    ThreeOmmBenchmark,
    benchmark_from_id,
    enumerate_front,
    eval_3omm,
    eval_momm,
    front_index,
    front_size,
)
from .core import (
    BitString,
    Individual,
    ObjectiveVector,
    hamming_distance,
    strictly_dominates,
    weakly_dominates,
)
from .crowding import (
    CrowdingAssignment,
    crowding_distance,
    crowding_distance_matrix,
    positive_count_bound,
    positive_crowding_count,
)
from .engines import (
    ConfigError,
    EngineStateError,
    IterationView,
    Nsga2Engine,
    NsgaConfig,
    RunTrace,
    SemoConfig,
    SemoEngine,
    attach_observer,
    nsga2_run,
    semo_run,
)
from .evolution import (
    SurvivalVariant,
    VariationConfig,
    bitwise_mutation,
    fair_parent_selection,
    one_bit_mutation,
    one_point_crossover,
    survival_indices,
    survival_select_original,
    survival_select_sequential,
)
from .harness import (
    ExperimentConfig,
    run_experiment,
    run_scatter,
    run_sweep,
)
from .metrics import (
    CoverageCounter,
    SummaryStats,
    coverage,
    neighbors,
    summarize,
)
from .ranking import FrontPartition, critical_front_index, non_dominated_sort

__version__ = "0.1.0"

__all__ = [
    "BitString",
    "ObjectiveVector",
    "Individual",
    "weakly_dominates",
    "strictly_dominates",
    "hamming_distance",
    "MommBenchmark",
    "ThreeOmmBenchmark",
    "ParetoFrontDescriptor",
    "FrontTooLargeError",
    "benchmark_from_id",
    "eval_momm",
    "eval_3omm",
    "front_size",
    "enumerate_front",
    "front_index",
    "FrontPartition",
    "non_dominated_sort",
    "critical_front_index",
    "CrowdingAssignment",
    "crowding_distance",
    "crowding_distance_matrix",
    "positive_crowding_count",
    "positive_count_bound",
    "SurvivalVariant",
    "VariationConfig",
    "fair_parent_selection",
    "one_bit_mutation",
    "bitwise_mutation",
    "one_point_crossover",
    "survival_indices",
    "survival_select_original",
    "survival_select_sequential",
    "NsgaConfig",
    "SemoConfig",
    "RunTrace",
    "IterationView",
    "Nsga2Engine",
    "SemoEngine",
    "nsga2_run",
    "semo_run",
    "attach_observer",
    "ConfigError",
    "EngineStateError",
    "CoverageCounter",
    "SummaryStats",
    "coverage",
    "neighbors",
    "summarize",
    "ExperimentConfig",
    "run_experiment",
    "run_sweep",
    "run_scatter",
    "__version__",
]
