"""Median/quartile charts from benchmark summary CSVs."""

from .figures import FigureSpec, plot_figure_data, render
from .summary import (
    SUMMARY_COLUMNS,
    SUMMARY_HEADER,
    FigureData,
    Series,
    SummaryRow,
    build_figure_data,
    category,
    read_summary,
)

__version__ = "0.1.0"
