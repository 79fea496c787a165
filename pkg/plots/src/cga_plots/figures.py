"""Chart rendering: median line with quartile band, one series per noise level."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

from .summary import FigureData, build_figure_data, read_summary


@dataclass(frozen=True)
class FigureSpec:
    summary_csv: str | Path
    out_dir: str | Path
    benchmark: str | None = None  # None renders every benchmark in the file
    log_y: bool = True


def plot_figure_data(data: FigureData, log_y: bool = True) -> Figure:
    """One chart: categorical x-axis, median lines, shaded q1-q3 bands.

    Censored entries (fewer successes than trials) get an extra cross marker.
    """
    fig = Figure(figsize=(7.5, 4.5))
    ax = fig.add_subplot(111)
    x = np.arange(len(data.categories))
    for s in data.series:
        medians = np.asarray(s.medians)
        line, = ax.plot(x, medians, marker="o", markersize=4, label=f"sigma^2={s.sigma2:g}")
        ax.fill_between(x, np.asarray(s.q1s), np.asarray(s.q3s), alpha=0.18,
                        color=line.get_color())
        flagged = np.flatnonzero(np.asarray(s.censored))
        if flagged.size:
            ax.plot(x[flagged], medians[flagged], linestyle="none", marker="x",
                    markersize=10, color=line.get_color())
    if log_y:
        ax.set_yscale("log")
    ax.set_xticks(x)
    ax.set_xticklabels(data.categories, rotation=30, ha="right")
    ax.set_xlabel("population size / parameter-less variant")
    ax.set_ylabel("fitness evaluations (median, q1-q3)")
    ax.set_title(data.benchmark)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> list[Path]:
    """Render one PNG per benchmark; returns the written paths."""
    rows = read_summary(spec.summary_csv)
    if not rows:
        raise ValueError(f"{spec.summary_csv}: no summary rows to plot")
    benchmarks = [spec.benchmark] if spec.benchmark else sorted({r.benchmark for r in rows})
    out_dir = Path(spec.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for benchmark in benchmarks:
        data = build_figure_data(rows, benchmark)
        fig = plot_figure_data(data, log_y=spec.log_y)
        path = out_dir / f"{benchmark}.png"
        fig.savefig(path, dpi=150)
        written.append(path)
    return written
