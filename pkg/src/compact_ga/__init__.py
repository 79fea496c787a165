"""Compact genetic algorithm, parameter-less wrappers, and a noisy benchmark harness."""

from .benchmarks import (
    DLB,
    JUMP,
    KINDS,
    LEADINGONES,
    ONEMAX,
    BenchmarkSpec,
    dlb,
    evaluate,
    fitness_function,
    is_optimum,
    jump,
    leading_ones,
    one_max,
    optimum_fitness,
)
from .harness import (
    DriftResult,
    ExperimentConfig,
    SummaryRow,
    TrialRecord,
    auto_budget_factor,
    default_eval_cap,
    drift_experiment,
    figure_preset,
    mix_seed,
    read_summary_csv,
    read_trials_csv,
    run_grid,
    run_trial,
    summarize,
    write_csv,
)
from .model import (
    GENERATOR_ALGORITHM,
    CgaParams,
    RandomSource,
    init_frequencies,
    margins,
    sample,
    update,
)
from .noise import NoiseSpec, noisy_eval
from .solvers import (
    ParallelRunResult,
    RoundRecord,
    RunOutcome,
    SmartRestartParams,
    SmartRestartResult,
    parallel_run,
    parallel_schedule,
    round_budget,
    run_cga,
    smart_restart,
)
from .theory import (
    AssumptionL,
    bound_budget_aware,
    bound_theorem1,
    ell_prime,
    exceptional_probability,
    exceptional_rounds,
    max_budget_branches,
    montecarlo_restart_cost,
    schedule,
    simulate_restart_costs,
)

__version__ = "0.1.0"
