"""Timing sweeps over generated complexes."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import astuple, dataclass, fields
from math import comb
from typing import Iterable, Sequence

from .complex import WeightedComplex
from .generate import GeneratorConfig, generate
from .paths import sssp


@dataclass(frozen=True)
class BenchRow:
    n_simplices: int  # (d-1)-simplices touched by at least one d-simplex
    d: int
    m: int
    build_ms: float
    sssp_ms: float


CSV_HEADER = tuple(f.name for f in fields(BenchRow))


def instance(vertices: int, d: int, m: int, seed: int) -> WeightedComplex:
    """A generated complex with about ``m`` d-simplices on ``vertices`` vertices."""
    p = min(1.0, m / comb(vertices, d + 1))
    return generate(GeneratorConfig(n=vertices, d=d, p=p, weight_low=1.0, weight_high=10.0, seed=seed))


def time_instance(X: WeightedComplex, repeat: int = 1) -> tuple[float, float, int]:
    """Median build and sssp wall times in ms, plus the incident-facet count.

    Build covers constructing the complex and its incidence index; each repeat
    starts from a fresh copy so nothing is cached between runs.
    """
    builds, runs = [], []
    for _ in range(repeat):
        t0 = time.perf_counter()
        Y = WeightedComplex(X.d, X.n, X.top)
        inc = Y.incidence
        t1 = time.perf_counter()
        source = next(iter(inc)) if inc else tuple(range(1, X.d + 1))
        sssp(Y, source)
        t2 = time.perf_counter()
        builds.append((t1 - t0) * 1e3)
        runs.append((t2 - t1) * 1e3)
    return statistics.median(builds), statistics.median(runs), len(inc)


def sweep(vertices: int, d: int, sizes: Iterable[int], seed: int = 0, repeat: int = 1) -> list[BenchRow]:
    rows = []
    for m in sizes:
        X = instance(vertices, d, m, seed)
        build_ms, sssp_ms, facets = time_instance(X, repeat)
        rows.append(BenchRow(facets, d, X.m, round(build_ms, 3), round(sssp_ms, 3)))
    return rows


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(astuple(r))
    return buf.getvalue()
