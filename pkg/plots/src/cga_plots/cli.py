"""The plot command: summary CSV in, one chart per benchmark out."""

from __future__ import annotations

import argparse
import sys

from .figures import FigureSpec, render


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(
        prog="cga-plot",
        description="Render median/quartile charts from a benchmark summary CSV.",
    )
    ap.add_argument("--in", dest="infile", required=True, help="summary CSV path")
    ap.add_argument("--out", required=True, help="output directory")
    ap.add_argument("--benchmark", default=None, help="render only this benchmark")
    ap.add_argument("--linear-y", action="store_true", help="linear instead of log y-axis")
    args = ap.parse_args(argv)
    try:
        written = render(
            FigureSpec(args.infile, args.out, args.benchmark, log_y=not args.linear_y)
        )
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
