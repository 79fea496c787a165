"""Experiment grid runner, statistics, CSV persistence, and the drift experiment."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from joblib import Parallel, delayed

from . import _kernels
from .benchmarks import DLB, JUMP, LEADINGONES, ONEMAX, BenchmarkSpec
from .model import CgaParams, RandomSource, init_frequencies
from .noise import NoiseSpec
from .solvers import SmartRestartParams, parallel_run, run_cga, smart_restart

ALGORITHMS = ("cga", "smart", "para")

TRIAL_HEADER = "benchmark,n,k,sigma2,algorithm,mu,b,U,trial,seed,evaluations,success"
SUMMARY_HEADER = "benchmark,n,k,sigma2,algorithm,mu,b,U,trials,success_count,median,q1,q3"

# quartile convention used throughout: linear interpolation between closest
# order statistics (numpy's default, "type 7")
QUARTILE_METHOD = "linear"

PARAMETERLESS_EVAL_CAP = 10**8


def auto_budget_factor(n: int) -> float:
    """The dimension-aware generation budget factor 0.5 / ln n."""
    return 0.5 / math.log(n)


def default_eval_cap(spec: BenchmarkSpec, algorithm: str) -> int:
    """Evaluation budget when none is configured.

    Fixed-mu runs get twice the per-run generation caps n^5 (OneMax,
    LeadingOnes), n^(k/2) (Jump), and 10 n^5 (DLB); the parameter-less
    wrappers get a flat 10^8 evaluations.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {ALGORITHMS}")
    if algorithm != "cga":
        return PARAMETERLESS_EVAL_CAP
    if spec.kind in (ONEMAX, LEADINGONES):
        return 2 * spec.n**5
    if spec.kind == JUMP:
        return 2 * int(math.floor(spec.n ** (spec.k / 2) + 0.5))
    return 2 * 10 * spec.n**5


@dataclass(frozen=True)
class ExperimentConfig:
    """One grid of runs: a benchmark, noise levels, one algorithm, its parameters."""

    benchmark: BenchmarkSpec
    sigma2_list: tuple[float, ...]
    algorithm: str
    trials: int
    master_seed: int
    mu_list: tuple[float, ...] = ()
    b_list: tuple[float, ...] = ()
    update_factor: float = 2.0
    eval_cap: int | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}, expected one of {ALGORITHMS}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.master_seed < 0:
            raise ValueError(f"master seed must be >= 0, got {self.master_seed}")
        if not self.sigma2_list:
            raise ValueError("sigma2_list must not be empty")
        if any(s < 0 for s in self.sigma2_list):
            raise ValueError(f"noise variances must be >= 0, got {self.sigma2_list}")
        if self.algorithm == "cga":
            if not self.mu_list:
                raise ValueError("fixed-mu cGA needs a nonempty mu_list")
            if any(mu < 1 for mu in self.mu_list):
                raise ValueError(f"population sizes must be >= 1, got {self.mu_list}")
        if self.algorithm == "smart":
            if not self.b_list:
                raise ValueError("smart-restart needs a nonempty b_list")
            if any(b <= 0 for b in self.b_list):
                raise ValueError(f"budget factors must be > 0, got {self.b_list}")
            if self.update_factor <= 1:
                raise ValueError(f"update factor must be > 1, got {self.update_factor}")
        if self.eval_cap is not None and self.eval_cap < 2:
            raise ValueError(f"eval cap must allow at least one generation, got {self.eval_cap}")

    def resolved_eval_cap(self) -> int:
        return self.eval_cap if self.eval_cap is not None else default_eval_cap(
            self.benchmark, self.algorithm
        )

    def grid(self) -> list[tuple[float, float | None, float | None]]:
        """Grid points as (sigma2, mu, b), enumerated in deterministic order."""
        if self.algorithm == "cga":
            return [(s, mu, None) for s in self.sigma2_list for mu in self.mu_list]
        if self.algorithm == "smart":
            return [(s, None, b) for s in self.sigma2_list for b in self.b_list]
        return [(s, None, None) for s in self.sigma2_list]


@dataclass(frozen=True)
class TrialRecord:
    benchmark: str
    n: int
    k: int | None
    sigma2: float
    algorithm: str
    mu: float | None
    b: float | None
    update_factor: float | None
    trial: int
    seed: int
    evaluations: int
    success: bool


@dataclass(frozen=True)
class SummaryRow:
    benchmark: str
    n: int
    k: int | None
    sigma2: float
    algorithm: str
    mu: float | None
    b: float | None
    update_factor: float | None
    trials: int
    success_count: int
    median: float
    q1: float
    q3: float


def mix_seed(master_seed: int, grid_index: int, trial_index: int) -> int:
    """Deterministic 64-bit trial seed from (master seed, grid index, trial index)."""
    seq = np.random.SeedSequence((master_seed, grid_index, trial_index))
    return int(seq.generate_state(1, np.uint64)[0])


def run_trial(
    spec: BenchmarkSpec,
    sigma2: float,
    algorithm: str,
    mu: float | None,
    b: float | None,
    update_factor: float,
    eval_cap: int,
    seed: int,
) -> tuple[int, bool]:
    """One seeded run; returns (evaluations, success).

    Unsuccessful runs report the cap itself as their evaluation count, the
    blunt runtime convention for censored runs; the success flag lets
    downstream analysis censor differently.
    """
    rng = RandomSource(seed)
    noise = NoiseSpec(sigma2)
    if algorithm == "cga":
        outcome = run_cga(CgaParams(spec.n, mu), spec, noise, eval_cap // 2, rng)
        return (outcome.evaluations, True) if outcome.success else (eval_cap, False)
    if algorithm == "smart":
        params = SmartRestartParams(update_factor, b, 2.0, eval_cap)
        result = smart_restart(params, spec, noise, rng)
        return (result.total_evaluations, True) if result.success else (eval_cap, False)
    result = parallel_run(spec, noise, rng, eval_cap)
    return (result.total_evaluations, True) if result.success else (eval_cap, False)


def run_grid(config: ExperimentConfig, n_jobs: int = 1) -> list[TrialRecord]:
    """Execute trials x grid points; a pure function of the config.

    Trials are independent and may run on a worker pool (n_jobs); records are
    always assembled in (grid index, trial index) order.
    """
    spec = config.benchmark
    cap = config.resolved_eval_cap()
    tasks = []
    for gi, (sigma2, mu, b) in enumerate(config.grid()):
        for ti in range(config.trials):
            tasks.append((gi, sigma2, mu, b, ti, mix_seed(config.master_seed, gi, ti)))
    if n_jobs == 1:
        results = [
            run_trial(spec, sigma2, config.algorithm, mu, b, config.update_factor, cap, seed)
            for (_, sigma2, mu, b, _, seed) in tasks
        ]
    else:
        results = Parallel(n_jobs=n_jobs)(
            delayed(run_trial)(
                spec, sigma2, config.algorithm, mu, b, config.update_factor, cap, seed
            )
            for (_, sigma2, mu, b, _, seed) in tasks
        )
    u = config.update_factor if config.algorithm == "smart" else None
    return [
        TrialRecord(
            benchmark=spec.kind,
            n=spec.n,
            k=spec.k,
            sigma2=sigma2,
            algorithm=config.algorithm,
            mu=mu,
            b=b,
            update_factor=u,
            trial=ti,
            seed=seed,
            evaluations=evals,
            success=success,
        )
        for (_, sigma2, mu, b, ti, seed), (evals, success) in zip(tasks, results)
    ]


def _none_last(v):
    return (v is None, v)


def summarize(records: list[TrialRecord]) -> list[SummaryRow]:
    """Group records by their config coordinates and compute quartile statistics.

    Output rows are canonically sorted, so any permutation of the input
    produces the same summary.
    """
    if not records:
        warnings.warn("no records to summarize", stacklevel=2)
        return []
    groups: dict[tuple, list[TrialRecord]] = {}
    for r in records:
        key = (r.benchmark, r.n, r.k, r.sigma2, r.algorithm, r.mu, r.b, r.update_factor)
        groups.setdefault(key, []).append(r)
    rows = []
    for key in sorted(groups, key=lambda k: tuple(_none_last(v) for v in k)):
        recs = groups[key]
        evals = np.array([r.evaluations for r in recs], dtype=np.float64)
        q1, median, q3 = np.percentile(evals, [25, 50, 75], method=QUARTILE_METHOD)
        rows.append(
            SummaryRow(
                *key,
                trials=len(recs),
                success_count=sum(r.success for r in recs),
                median=float(median),
                q1=float(q1),
                q3=float(q3),
            )
        )
    return rows


@dataclass(frozen=True)
class DriftResult:
    """Margin hitting times of a neutral bit's frequency for one mu."""

    mu: float
    times: tuple[int, ...]

    @property
    def mean(self) -> float:
        return float(np.mean(self.times))

    @property
    def median(self) -> float:
        return float(np.median(self.times))

    @property
    def mean_over_mu2(self) -> float:
        return self.mean / (self.mu * self.mu)


def drift_experiment(
    n: int, mu_list: list[float], trials: int, master_seed: int
) -> list[DriftResult]:
    """Hitting-time statistics of a neutral frequency under pure genetic drift.

    Runs the cGA on the one-count of bits 2..n (bit 1 neutral), noise-free,
    and records the generation at which the neutral frequency first equals a
    margin. There is no optimum termination.
    """
    if n < 3:
        raise ValueError(f"drift experiment needs n >= 3, got n={n}")
    results = []
    for mi, mu in enumerate(mu_list):
        # expected hitting time is Theta(mu^2); 1000 mu^2 is unreachable in practice
        safety_cap = max(10_000, int(1000 * mu * mu))
        times = []
        for ti in range(trials):
            rng = RandomSource(mix_seed(master_seed, mi, ti))
            freqs = init_frequencies(n)
            hit = _kernels.drift_first_hit(freqs, float(mu), safety_cap, rng.generator)
            if hit < 0:
                raise RuntimeError(
                    f"neutral frequency did not reach a margin within {safety_cap} generations"
                )
            times.append(int(hit))
        results.append(DriftResult(float(mu), tuple(times)))
    return results


def _format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _trial_fields(r: TrialRecord) -> list:
    return [r.benchmark, r.n, r.k, r.sigma2, r.algorithm, r.mu, r.b, r.update_factor,
            r.trial, r.seed, r.evaluations, r.success]


def _summary_fields(r: SummaryRow) -> list:
    return [r.benchmark, r.n, r.k, r.sigma2, r.algorithm, r.mu, r.b, r.update_factor,
            r.trials, r.success_count, r.median, r.q1, r.q3]


def write_csv(items: list, path: str | Path, kind: str | None = None) -> None:
    """Write trial records or summary rows with the exact column schema.

    Floats keep full round-trip precision; the header row is always present.
    kind ("trials" or "summary") is only needed to pick the header for an
    empty list.
    """
    if items and isinstance(items[0], TrialRecord):
        kind = "trials"
    elif items and isinstance(items[0], SummaryRow):
        kind = "summary"
    elif kind is None:
        kind = "trials"
    if kind not in ("trials", "summary"):
        raise ValueError(f"kind must be 'trials' or 'summary', got {kind!r}")
    header = TRIAL_HEADER if kind == "trials" else SUMMARY_HEADER
    to_fields = _trial_fields if kind == "trials" else _summary_fields
    lines = [header]
    lines.extend(",".join(_format_value(v) for v in to_fields(item)) for item in items)
    try:
        Path(path).write_text("\n".join(lines) + "\n")
    except OSError as e:
        raise OSError(f"cannot write {path}: {e}") from e


def _parse(value: str, conv):
    return None if value == "" else conv(value)


def _parse_bool(value: str) -> bool:
    if value not in ("true", "false"):
        raise ValueError(f"expected 'true' or 'false', got {value!r}")
    return value == "true"


def read_trials_csv(path: str | Path) -> list[TrialRecord]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != TRIAL_HEADER:
        raise ValueError(f"{path}: expected trial header {TRIAL_HEADER!r}")
    records = []
    for line in lines[1:]:
        f = line.split(",")
        if len(f) != 12:
            raise ValueError(f"{path}: expected 12 fields, got {len(f)}: {line!r}")
        records.append(
            TrialRecord(
                benchmark=f[0],
                n=int(f[1]),
                k=_parse(f[2], int),
                sigma2=float(f[3]),
                algorithm=f[4],
                mu=_parse(f[5], float),
                b=_parse(f[6], float),
                update_factor=_parse(f[7], float),
                trial=int(f[8]),
                seed=int(f[9]),
                evaluations=int(f[10]),
                success=_parse_bool(f[11]),
            )
        )
    return records


def read_summary_csv(path: str | Path) -> list[SummaryRow]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != SUMMARY_HEADER:
        raise ValueError(f"{path}: expected summary header {SUMMARY_HEADER!r}")
    rows = []
    for line in lines[1:]:
        f = line.split(",")
        if len(f) != 13:
            raise ValueError(f"{path}: expected 13 fields, got {len(f)}: {line!r}")
        rows.append(
            SummaryRow(
                benchmark=f[0],
                n=int(f[1]),
                k=_parse(f[2], int),
                sigma2=float(f[3]),
                algorithm=f[4],
                mu=_parse(f[5], float),
                b=_parse(f[6], float),
                update_factor=_parse(f[7], float),
                trials=int(f[8]),
                success_count=int(f[9]),
                median=float(f[10]),
                q1=float(f[11]),
                q3=float(f[12]),
            )
        )
    return rows


_PRESETS = {
    1: (BenchmarkSpec(ONEMAX, 100), range(5, 11)),
    2: (BenchmarkSpec(LEADINGONES, 50), range(2, 11)),
    3: (BenchmarkSpec(JUMP, 50, 10), range(9, 19)),
    4: (BenchmarkSpec(DLB, 30), range(1, 15)),
}


def figure_preset(figure: int, master_seed: int = 0) -> list[ExperimentConfig]:
    """The three experiment grids (fixed-mu, smart-restart, parallel-run) of one figure.

    Noise variances are {0, n/2, n, 2n, 4n}; fixed-mu runs 10 trials over the
    figure's power-of-two population range, the parameter-less algorithms run
    20 trials, smart-restart with budget factors 8 and 0.5/ln n and update
    factor 2.
    """
    if figure not in _PRESETS:
        raise ValueError(f"figure must be one of {sorted(_PRESETS)}, got {figure}")
    spec, mu_range = _PRESETS[figure]
    sigma2 = (0.0, spec.n / 2, float(spec.n), 2.0 * spec.n, 4.0 * spec.n)
    common = dict(benchmark=spec, sigma2_list=sigma2, master_seed=master_seed)
    return [
        ExperimentConfig(
            algorithm="cga", trials=10, mu_list=tuple(float(2**e) for e in mu_range), **common
        ),
        ExperimentConfig(
            algorithm="smart",
            trials=20,
            b_list=(8.0, auto_budget_factor(spec.n)),
            update_factor=2.0,
            **common,
        ),
        ExperimentConfig(algorithm="para", trials=20, **common),
    ]


def config_to_dict(config: ExperimentConfig) -> dict:
    return {
        "benchmark": config.benchmark.kind,
        "n": config.benchmark.n,
        "k": config.benchmark.k,
        "sigma2": list(config.sigma2_list),
        "algorithm": config.algorithm,
        "trials": config.trials,
        "master_seed": config.master_seed,
        "mu": list(config.mu_list),
        "b": list(config.b_list),
        "update_factor": config.update_factor,
        "eval_cap": config.eval_cap,
    }


def config_from_dict(d: dict) -> ExperimentConfig:
    return ExperimentConfig(
        benchmark=BenchmarkSpec(d["benchmark"], d["n"], d.get("k")),
        sigma2_list=tuple(d["sigma2"]),
        algorithm=d["algorithm"],
        trials=d["trials"],
        master_seed=d["master_seed"],
        mu_list=tuple(d.get("mu") or ()),
        b_list=tuple(d.get("b") or ()),
        update_factor=d.get("update_factor", 2.0),
        eval_cap=d.get("eval_cap"),
    )
