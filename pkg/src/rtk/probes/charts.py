"""SVG charts for probe reports. Output is byte-stable for identical input."""

from __future__ import annotations

from collections.abc import Sequence

import matplotlib
from matplotlib.figure import Figure

_SVG_SETTINGS = {"svg.hashsalt": "rtk", "svg.fonttype": "none"}


def _save(figure: Figure, path: str) -> None:
    with matplotlib.rc_context(_SVG_SETTINGS):
        figure.savefig(path, format="svg", metadata={"Date": None})


def write_line_chart(
    path: str, xs: Sequence[float], ys: Sequence[float], title: str, xlabel: str, ylabel: str
) -> None:
    figure = Figure(figsize=(7, 4))
    axes = figure.subplots()
    axes.plot(list(xs), list(ys), marker="o", linewidth=1.2, markersize=3)
    axes.set_title(title)
    axes.set_xlabel(xlabel)
    axes.set_ylabel(ylabel)
    axes.grid(True, alpha=0.3)
    figure.tight_layout()
    _save(figure, path)


def write_bar_chart(
    path: str, labels: Sequence[str], values: Sequence[float], title: str, ylabel: str
) -> None:
    figure = Figure(figsize=(max(5.0, 0.35 * len(labels) + 2.0), 4))
    axes = figure.subplots()
    axes.bar(range(len(labels)), list(values))
    axes.set_xticks(range(len(labels)), list(labels), rotation=60 if len(labels) > 12 else 0)
    axes.axhline(0.0, color="black", linewidth=0.6)
    axes.set_title(title)
    axes.set_ylabel(ylabel)
    figure.tight_layout()
    _save(figure, path)
