"""Parsing and category layout for benchmark summary CSVs.

The input contract is the summary schema written by the benchmark harness:
one row per configuration with median and first/third quartile of the
evaluation counts. Rows map to a categorical x-axis: fixed-mu entries in
ascending log2(mu), then the parallel-run entry, then smart-restart entries
by descending budget factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

SUMMARY_HEADER = "benchmark,n,k,sigma2,algorithm,mu,b,U,trials,success_count,median,q1,q3"
SUMMARY_COLUMNS = SUMMARY_HEADER.split(",")


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


def _opt(value: str, conv):
    return None if value == "" else conv(value)


def read_summary(path: str | Path) -> list[SummaryRow]:
    """Parse a summary CSV, verifying the exact schema."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty file, expected summary header")
    got = lines[0].split(",")
    missing = [c for c in SUMMARY_COLUMNS if c not in got]
    if missing:
        raise ValueError(f"{path}: summary schema mismatch, missing column(s) {missing}")
    if got != SUMMARY_COLUMNS:
        raise ValueError(f"{path}: summary schema mismatch, expected {SUMMARY_HEADER!r}")
    rows = []
    for line in lines[1:]:
        f = line.split(",")
        if len(f) != len(SUMMARY_COLUMNS):
            raise ValueError(f"{path}: expected {len(SUMMARY_COLUMNS)} fields: {line!r}")
        rows.append(
            SummaryRow(
                benchmark=f[0],
                n=int(f[1]),
                k=_opt(f[2], int),
                sigma2=float(f[3]),
                algorithm=f[4],
                mu=_opt(f[5], float),
                b=_opt(f[6], float),
                update_factor=_opt(f[7], float),
                trials=int(f[8]),
                success_count=int(f[9]),
                median=float(f[10]),
                q1=float(f[11]),
                q3=float(f[12]),
            )
        )
    return rows


def category(row: SummaryRow) -> tuple[tuple, str]:
    """Sort key and x-axis label for one row."""
    if row.algorithm == "cga":
        exponent = math.log2(row.mu)
        label = f"2^{exponent:g}" if exponent == int(exponent) else f"mu={row.mu:g}"
        return (0, exponent), label
    if row.algorithm == "para":
        return (1, 0.0), "para"
    auto = 0.5 / math.log(row.n)
    if row.b == 8.0:
        label = "b=8"
    elif math.isclose(row.b, auto, rel_tol=1e-6):
        label = "b=0.5/ln n"
    else:
        label = f"b={row.b:g}"
    return (2, -row.b), label


@dataclass(frozen=True)
class Series:
    """One sigma^2 line over the categorical axis; NaN marks absent cells."""

    sigma2: float
    medians: tuple[float, ...]
    q1s: tuple[float, ...]
    q3s: tuple[float, ...]
    censored: tuple[bool, ...]


@dataclass(frozen=True)
class FigureData:
    benchmark: str
    categories: tuple[str, ...]
    series: tuple[Series, ...]


def build_figure_data(rows: list[SummaryRow], benchmark: str) -> FigureData:
    """Arrange one benchmark's rows into ordered categories and sigma^2 series."""
    rows = [r for r in rows if r.benchmark == benchmark]
    if not rows:
        raise ValueError(f"no rows for benchmark {benchmark!r}")
    keyed = sorted({category(r) for r in rows})
    labels = tuple(label for _, label in keyed)
    index = {label: i for i, label in enumerate(labels)}
    series = []
    for sigma2 in sorted({r.sigma2 for r in rows}):
        nan = float("nan")
        medians = [nan] * len(labels)
        q1s = [nan] * len(labels)
        q3s = [nan] * len(labels)
        censored = [False] * len(labels)
        for r in rows:
            if r.sigma2 != sigma2:
                continue
            i = index[category(r)[1]]
            medians[i], q1s[i], q3s[i] = r.median, r.q1, r.q3
            censored[i] = r.success_count < r.trials
        series.append(Series(sigma2, tuple(medians), tuple(q1s), tuple(q3s), tuple(censored)))
    return FigureData(benchmark, labels, tuple(series))
