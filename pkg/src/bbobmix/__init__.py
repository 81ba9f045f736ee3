"""Generator and benchmarking harness for blended box-constrained
continuous minimization problems.

Problems are weighted combinations, in log-precision space, of 24
classic component functions; the optimum is placed uniformly at random
in [-5, 5]^dim and its value is exactly 1e-8.
"""

from .affine import (
    DOMAIN_HIGH,
    DOMAIN_LOW,
    LOG_FLOOR,
    N_COMPONENTS,
    ManyAffineProblem,
    PairwiseProblem,
    clamped_log_precision,
    combine_pairwise,
    inverse_rescale,
    make_many_affine,
    rescale_component,
    sample_instance,
    sample_weights,
    validate_weights,
)
from .calibration import (
    Aggregator,
    DEFAULT_SCALE_FACTORS,
    Provenance,
    ScaleTable,
    compare_to_default,
    compute_scale_factor,
    compute_scale_table,
    default_scale_table,
    equal_scale_table,
)
from .components import (
    FUNCTION_NAMES,
    ComponentProblem,
    create_component,
    evaluate_raw,
    optimum_location,
)
from .performance import (
    Algorithm,
    RunTrace,
    alpha_sweep,
    aocc,
    default_budget,
    mean_aocc,
    run_optimizer,
    run_optimizer_batch,
    trace_csv_text,
)
from .suite import (
    ProblemRecord,
    SuiteDefinition,
    generate_suite,
    load_suite,
    save_suite,
    suite_from_json,
    suite_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "Aggregator",
    "Algorithm",
    "ComponentProblem",
    "DEFAULT_SCALE_FACTORS",
    "DOMAIN_HIGH",
    "DOMAIN_LOW",
    "FUNCTION_NAMES",
    "LOG_FLOOR",
    "ManyAffineProblem",
    "N_COMPONENTS",
    "PairwiseProblem",
    "ProblemRecord",
    "Provenance",
    "RunTrace",
    "ScaleTable",
    "SuiteDefinition",
    "alpha_sweep",
    "aocc",
    "clamped_log_precision",
    "combine_pairwise",
    "compare_to_default",
    "compute_scale_factor",
    "compute_scale_table",
    "create_component",
    "default_budget",
    "default_scale_table",
    "equal_scale_table",
    "evaluate_raw",
    "generate_suite",
    "inverse_rescale",
    "load_suite",
    "make_many_affine",
    "mean_aocc",
    "optimum_location",
    "rescale_component",
    "run_optimizer",
    "run_optimizer_batch",
    "sample_instance",
    "sample_weights",
    "save_suite",
    "suite_from_json",
    "suite_to_json",
    "trace_csv_text",
    "validate_weights",
]
