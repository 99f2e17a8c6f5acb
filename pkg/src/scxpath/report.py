"""Figures for benchmark sweeps.

Uses the object-oriented matplotlib API so no pyplot state or GUI backend
is touched; the output format follows the file extension.
"""

from __future__ import annotations

import math
from typing import Sequence

from matplotlib.figure import Figure

from .bench import BenchRow


def bench_figure(rows: Sequence[BenchRow], title: str | None = None) -> Figure:
    """Log-log plot of sssp time against m, with an (n+m) log n guide through the first point."""
    rows = sorted(rows, key=lambda r: r.m)
    fig = Figure(figsize=(5.0, 3.6), layout="constrained")
    ax = fig.add_subplot()
    ms = [r.m for r in rows]
    ax.plot(ms, [r.sssp_ms for r in rows], "o-", label="sssp")
    ax.plot(ms, [r.build_ms for r in rows], "s--", label="build", alpha=0.7)

    ref = [(r.n_simplices + r.m) * math.log(max(r.n_simplices, 2)) for r in rows]
    if rows and ref[0] > 0 and rows[0].sssp_ms > 0:
        scale = rows[0].sssp_ms / ref[0]
        ax.plot(ms, [scale * x for x in ref], ":", color="gray", label=r"$(n+m)\log n$")

    if all(m > 0 for m in ms) and all(r.sssp_ms > 0 for r in rows):
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel("d-simplices m")
    ax.set_ylabel("wall time [ms]")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    return fig


def save_bench_figure(rows: Sequence[BenchRow], path: str, title: str | None = None) -> None:
    bench_figure(rows, title).savefig(path, dpi=150)
