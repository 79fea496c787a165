"""The three algorithms: bounded cGA run, smart-restart wrapper, parallel-run scheduler."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels
from .benchmarks import BenchmarkSpec, optimum_fitness
from .model import CgaParams, RandomSource, init_frequencies
from .noise import NoiseSpec


@dataclass(frozen=True)
class RunOutcome:
    """Result of one bounded cGA run.

    evaluations is always 2 * generations; first_hit_evaluations is the
    evaluation count at which an optimum was first sampled (the two
    evaluations of a generation are counted atomically) and is present iff
    the run succeeded, as is hitting_sample, the sampled optimum itself.
    """

    success: bool
    generations: int
    evaluations: int
    first_hit_evaluations: int | None = None
    hitting_sample: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SmartRestartParams:
    """Update factor U > 1, generation budget factor b > 0, and schedule origin."""

    update_factor: float = 2.0
    budget_factor: float = 8.0
    initial_mu: float = 2.0
    global_eval_cap: int | None = None

    def __post_init__(self):
        if self.update_factor <= 1:
            raise ValueError(f"update factor must be > 1, got {self.update_factor}")
        if self.budget_factor <= 0:
            raise ValueError(f"budget factor must be > 0, got {self.budget_factor}")
        if self.initial_mu < 1:
            raise ValueError(f"initial mu must be >= 1, got {self.initial_mu}")


@dataclass(frozen=True)
class RoundRecord:
    round_index: int
    mu: float
    budget_generations: int
    outcome: RunOutcome


@dataclass(frozen=True)
class SmartRestartResult:
    success: bool
    total_evaluations: int
    rounds: list[RoundRecord] = field(default_factory=list)


@dataclass(frozen=True)
class ParallelRunResult:
    success: bool
    total_evaluations: int
    winner_process: int | None = None
    processes_started: int = 0
    hitting_sample: tuple[int, ...] | None = None


def round_budget(budget_factor: float, mu: float) -> int:
    """Generation budget for one restart round: max(1, round-half-up(b * mu^2))."""
    return max(1, int(math.floor(budget_factor * mu * mu + 0.5)))


def run_cga(
    params: CgaParams,
    spec: BenchmarkSpec,
    noise: NoiseSpec,
    max_generations: int,
    rng: RandomSource,
) -> RunOutcome:
    """One cGA run from a fresh all-1/2 frequency vector, capped at max_generations.

    Each generation samples two individuals, declares success if either one is
    the optimum (on true fitness, before noise and before the update), else
    picks the winner by perceived fitness with ties favoring the first sample,
    and nudges the frequencies by 1/mu with margin clamping.
    """
    if max_generations < 1:
        raise ValueError(f"max_generations must be >= 1, got {max_generations}")
    if params.n != spec.n:
        raise ValueError(f"dimension mismatch: params.n={params.n}, spec.n={spec.n}")
    freqs = init_frequencies(params.n)
    hit = np.zeros(params.n, np.int8)
    success, gens = _kernels.run_bounded(
        freqs,
        float(params.mu),
        _kernels.kind_code(spec.kind),
        spec.k or 0,
        optimum_fitness(spec),
        noise.sigma,
        int(max_generations),
        rng.generator,
        hit,
    )
    evals = 2 * int(gens)
    return RunOutcome(
        bool(success),
        int(gens),
        evals,
        evals if success else None,
        tuple(int(v) for v in hit) if success else None,
    )


def smart_restart(
    params: SmartRestartParams,
    spec: BenchmarkSpec,
    noise: NoiseSpec,
    rng: RandomSource,
) -> SmartRestartResult:
    """Restart the cGA with geometrically growing population sizes.

    Round ell runs a fresh cGA with mu_ell = initial_mu * U^(ell-1) for at
    most B_ell = round_budget(b, mu_ell) generations, on a child stream
    derived from (master seed, ell). Stops at the first successful round. If
    global_eval_cap is set, the last round is truncated so the total never
    exceeds the cap, and exhausting it flags the result unsuccessful.
    """
    total = 0
    rounds: list[RoundRecord] = []
    ell = 1
    while True:
        mu = params.initial_mu * params.update_factor ** (ell - 1)
        budget = round_budget(params.budget_factor, mu)
        gens_allowed = budget
        if params.global_eval_cap is not None:
            remaining = params.global_eval_cap - total
            if remaining < 2:
                return SmartRestartResult(False, total, rounds)
            gens_allowed = min(budget, remaining // 2)
        outcome = run_cga(
            CgaParams(spec.n, mu), spec, noise, gens_allowed, rng.child(ell)
        )
        total += outcome.evaluations
        rounds.append(RoundRecord(ell, mu, budget, outcome))
        if outcome.success:
            return SmartRestartResult(True, total, rounds)
        ell += 1


def parallel_schedule() -> Iterator[tuple[int, int, float, int]]:
    """Execution order of the parallel-run scheduler.

    Yields (round, process, mu, generations to run now). Round 1 runs process
    1 (mu = 1) for one generation. Round ell >= 2 first continues processes
    1..ell-1 for 2^(ell-1) generations each, in process order, then starts
    process ell (mu = 2^(ell-1)) for 2^ell - 1 generations, which brings every
    process to 2^ell - 1 total generations at the end of the round.
    """
    yield 1, 1, 1.0, 1
    ell = 2
    while True:
        chunk = 2 ** (ell - 1)
        for j in range(1, ell):
            yield ell, j, float(2 ** (j - 1)), chunk
        yield ell, ell, float(chunk), 2**ell - 1
        ell += 1


def parallel_run(
    spec: BenchmarkSpec,
    noise: NoiseSpec,
    rng: RandomSource,
    global_eval_cap: int | None = None,
) -> ParallelRunResult:
    """Run cGA processes with doubling population sizes, interleaved by rounds.

    Process ell keeps its own frequency vector and child stream (derived from
    the master seed and its index) across rounds, so it resumes rather than
    restarts. The optimum check happens after every generation of every
    process; evaluations count 2 per generation over all processes up to and
    including the terminating generation.
    """
    kind = _kernels.kind_code(spec.kind)
    k = spec.k or 0
    fmax = optimum_fitness(spec)
    sigma = noise.sigma
    states: dict[int, tuple] = {}
    hit = np.zeros(spec.n, np.int8)
    total = 0
    for _round, proc, mu, chunk in parallel_schedule():
        if proc not in states:
            states[proc] = (init_frequencies(spec.n), rng.child(proc))
        freqs, proc_rng = states[proc]
        gens_allowed = chunk
        if global_eval_cap is not None:
            remaining = global_eval_cap - total
            if remaining < 2:
                return ParallelRunResult(False, total, None, len(states))
            gens_allowed = min(chunk, remaining // 2)
        success, gens = _kernels.run_bounded(
            freqs, mu, kind, k, fmax, sigma, int(gens_allowed), proc_rng.generator, hit
        )
        total += 2 * int(gens)
        if success:
            return ParallelRunResult(
                True, total, proc, len(states), tuple(int(v) for v in hit)
            )
    raise AssertionError("unreachable: parallel_schedule is infinite")
