"""Command-line interface: run experiment grids, summarize, drift, bound, preset."""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, harness, theory
from .benchmarks import KINDS, BenchmarkSpec
from .model import GENERATOR_ALGORITHM, RandomSource


def _write_metadata(out_path: str, payload: dict) -> None:
    """Sidecar JSON next to a CSV; the CSV schema itself stays fixed."""
    meta = {
        "generator": GENERATOR_ALGORITHM,
        "quartile_method": f"{harness.QUARTILE_METHOD} interpolation between closest order statistics",
        "package_version": __version__,
        **payload,
    }
    Path(str(out_path) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n")


def _build_config(args) -> harness.ExperimentConfig:
    spec = BenchmarkSpec(args.benchmark, args.n, args.k)
    b_list = tuple(
        harness.auto_budget_factor(args.n) if b == "auto" else float(b)
        for b in (args.b or [])
    )
    return harness.ExperimentConfig(
        benchmark=spec,
        sigma2_list=tuple(args.sigma2 or [0.0]),
        algorithm=args.algorithm,
        trials=args.trials,
        master_seed=args.seed,
        mu_list=tuple(args.mu or []),
        b_list=b_list,
        update_factor=args.update_factor,
        eval_cap=args.eval_cap,
    )


def _load_configs(path: str) -> list[harness.ExperimentConfig]:
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict) and "configs" in data:
        data = data["configs"]
    if isinstance(data, dict):
        data = [data]
    return [harness.config_from_dict(d) for d in data]


def _cmd_run(args) -> int:
    if args.config:
        configs = _load_configs(args.config)
    else:
        if not args.benchmark or not args.algorithm:
            raise ValueError("either --config or both --benchmark and --algorithm are required")
        configs = [_build_config(args)]
    records = []
    for config in configs:
        records.extend(harness.run_grid(config, n_jobs=args.jobs))
    harness.write_csv(records, args.out, kind="trials")
    _write_metadata(args.out, {"configs": [harness.config_to_dict(c) for c in configs]})
    print(f"wrote {len(records)} trial records to {args.out}")
    return 0


def _cmd_summarize(args) -> int:
    records = harness.read_trials_csv(args.infile)
    rows = harness.summarize(records)
    harness.write_csv(rows, args.out, kind="summary")
    _write_metadata(args.out, {"source": str(args.infile), "rows": len(rows)})
    print(f"wrote {len(rows)} summary rows to {args.out}")
    return 0


def _cmd_drift(args) -> int:
    results = harness.drift_experiment(args.n, args.mu, args.trials, args.seed)
    lines = ["mu,trials,mean,median,mean_over_mu2"]
    for r in results:
        lines.append(f"{r.mu!r},{len(r.times)},{r.mean!r},{r.median!r},{r.mean_over_mu2!r}")
    Path(args.out).write_text("\n".join(lines) + "\n")
    _write_metadata(
        args.out,
        {"n": args.n, "trials": args.trials, "master_seed": args.seed, "mu": args.mu},
    )
    for r in results:
        print(
            f"mu={r.mu:g}: mean={r.mean:.1f} median={r.median:.1f} "
            f"mean/mu^2={r.mean_over_mu2:.3f} (4 mu^2 = {4 * r.mu * r.mu:g})"
        )
    return 0


def _cmd_bound(args) -> int:
    a = theory.AssumptionL(args.mu_tilde, args.T, args.p, args.mu_plus)
    out = {
        "bound": theory.bound_theorem1(a, args.update_factor, args.budget_factor),
        "bound_budget_aware": theory.bound_budget_aware(
            a, args.update_factor, args.budget_factor
        ),
        "ell_prime": theory.ell_prime(a, args.update_factor, args.budget_factor, args.initial_mu),
        "exceptional_rounds": theory.exceptional_rounds(
            a, args.update_factor, args.budget_factor, args.initial_mu
        ),
        "exceptional_probability": theory.exceptional_probability(
            a, args.update_factor, args.budget_factor, args.initial_mu
        ),
    }
    if args.trials:
        for unit in theory.BUDGET_UNITS:
            costs = theory.simulate_restart_costs(
                a,
                args.update_factor,
                args.budget_factor,
                args.trials,
                RandomSource(args.seed),
                args.initial_mu,
                budget_unit=unit,
            )
            out[f"montecarlo_{unit}"] = {
                "mean": float(np.mean(costs)),
                "stderr": float(np.std(costs, ddof=1) / math.sqrt(len(costs))),
                "trials": args.trials,
            }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_preset(args) -> int:
    configs = harness.figure_preset(args.figure, args.seed)
    payload = {
        "figure": args.figure,
        "configs": [harness.config_to_dict(c) for c in configs],
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote preset for figure {args.figure} to {args.out}")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cga-bench",
        description="Compact GA benchmark harness with smart-restart and parallel-run wrappers.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute an experiment grid and write a trial CSV")
    p_run.add_argument("--benchmark", choices=KINDS)
    p_run.add_argument("--n", type=int)
    p_run.add_argument("--k", type=int, default=None, help="jump size (jump only)")
    p_run.add_argument("--sigma2", type=float, action="append", help="noise variance (repeatable)")
    p_run.add_argument("--algorithm", choices=harness.ALGORITHMS)
    p_run.add_argument("--mu", type=float, action="append", help="population size (repeatable)")
    p_run.add_argument(
        "--b", action="append", help="budget factor (repeatable); 'auto' means 0.5/ln n"
    )
    p_run.add_argument("--update-factor", type=float, default=2.0)
    p_run.add_argument("--trials", type=int, default=10)
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--eval-cap", type=int, default=None)
    p_run.add_argument("--jobs", type=int, default=1, help="parallel trial workers")
    p_run.add_argument("--config", default=None, help="JSON config (e.g. from 'preset')")
    p_run.add_argument("--out", required=True)
    p_run.set_defaults(func=_cmd_run)

    p_sum = sub.add_parser("summarize", help="aggregate a trial CSV into a summary CSV")
    p_sum.add_argument("--in", dest="infile", required=True)
    p_sum.add_argument("--out", required=True)
    p_sum.set_defaults(func=_cmd_summarize)

    p_drift = sub.add_parser("drift", help="neutral-bit margin hitting-time experiment")
    p_drift.add_argument("--n", type=int, required=True)
    p_drift.add_argument("--mu", type=float, action="append", required=True)
    p_drift.add_argument("--trials", type=int, default=200)
    p_drift.add_argument("--seed", type=int, default=0)
    p_drift.add_argument("--out", required=True)
    p_drift.set_defaults(func=_cmd_drift)

    p_bound = sub.add_parser("bound", help="evaluate the restart-cost bound and its oracle")
    p_bound.add_argument("--mu-tilde", type=float, required=True)
    p_bound.add_argument("--T", type=float, required=True, dest="T")
    p_bound.add_argument("--p", type=float, required=True)
    p_bound.add_argument("--update-factor", "-U", type=float, default=2.0)
    p_bound.add_argument("--budget-factor", "-b", type=float, required=True)
    p_bound.add_argument("--initial-mu", type=float, default=2.0)
    p_bound.add_argument("--mu-plus", type=float, default=None)
    p_bound.add_argument("--trials", type=int, default=0, help="Monte-Carlo trials (0 = skip)")
    p_bound.add_argument("--seed", type=int, default=0)
    p_bound.set_defaults(func=_cmd_bound)

    p_preset = sub.add_parser("preset", help="emit the experiment grids for figure 1|2|3|4")
    p_preset.add_argument("figure", type=int, choices=[1, 2, 3, 4])
    p_preset.add_argument("--seed", type=int, default=0)
    p_preset.add_argument("--out", default=None)
    p_preset.set_defaults(func=_cmd_preset)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
