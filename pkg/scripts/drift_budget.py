#!/usr/bin/env python3
"""Neutral-bit drift check: empirical margin hitting times against the 4 mu^2 budget."""

import argparse
import sys

from compact_ga import drift_experiment


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--mu", type=float, nargs="+", default=[16.0, 32.0, 64.0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    results = drift_experiment(args.n, args.mu, args.trials, args.seed)
    print(f"{'mu':>8} {'mean':>10} {'median':>10} {'mean/mu^2':>10} {'4mu^2':>10}")
    for r in results:
        print(
            f"{r.mu:8.0f} {r.mean:10.1f} {r.median:10.1f} "
            f"{r.mean_over_mu2:10.3f} {4 * r.mu * r.mu:10.0f}"
        )
    for earlier, later in zip(results, results[1:]):
        ratio = later.mean / earlier.mean
        print(f"mean({later.mu:.0f}) / mean({earlier.mu:.0f}) = {ratio:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
