#!/usr/bin/env python3
"""Run one figure preset end to end: trials CSV plus summary CSV.

Warning: the full presets replicate the published grids and can take hours in
the genetic-drift corners (small mu with noise). Use --trials / --sigma2-only
to cut the grid down for a quick look.
"""

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

from compact_ga import figure_preset, run_grid, summarize, write_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("figure", type=int, choices=[1, 2, 3, 4])
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--trials", type=int, default=None, help="override trial counts")
    ap.add_argument(
        "--sigma2-only", type=float, default=None, help="restrict to one noise variance"
    )
    args = ap.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    configs = figure_preset(args.figure, args.seed)
    if args.trials is not None:
        configs = [replace(c, trials=args.trials) for c in configs]
    if args.sigma2_only is not None:
        configs = [replace(c, sigma2_list=(args.sigma2_only,)) for c in configs]

    records = []
    for config in configs:
        t = time.time()
        records.extend(run_grid(config, n_jobs=args.jobs))
        print(f"{config.algorithm}: {len(config.grid()) * config.trials} trials "
              f"in {time.time() - t:.1f}s")
    trials_path = out_dir / f"figure{args.figure}_trials.csv"
    summary_path = out_dir / f"figure{args.figure}_summary.csv"
    write_csv(records, trials_path)
    write_csv(summarize(records), summary_path)
    print(f"wrote {trials_path} and {summary_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
