"""Single-source shortest d-paths over the (d-1)-simplices of a weighted complex.

The search is Dijkstra's algorithm run on the implicit dual graph: two
(d-1)-simplices are adjacent when their union is a stored d-simplex, and the
step costs that simplex's weight. Edges are produced on the fly from the
complex's incidence index. The priority queue is a binary heap with lazy
deletion; heap entries are ``(distance, simplex)`` so equal distances pop in
lexicographic simplex order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Iterable, NamedTuple, Sequence

from .complex import Simplex, WeightedComplex, require_valid

INF = math.inf


class Pred(NamedTuple):
    simplex: Simplex
    via: Simplex


@dataclass
class DistanceMap:
    """Finalized distances from ``source``.

    ``dist`` holds only reached simplices, in the order they were finalized;
    anything missing is at infinite distance. ``pred`` gives, for every reached
    simplex except the source, the simplex it was reached from and the
    d-simplex used for that step.
    """

    source: Simplex
    dist: dict[Simplex, float] = field(default_factory=dict)
    pred: dict[Simplex, Pred] = field(default_factory=dict)

    def __getitem__(self, sigma: Simplex) -> float:
        return self.dist.get(sigma, INF)

    def __contains__(self, sigma: object) -> bool:
        return sigma in self.dist

    def __len__(self) -> int:
        return len(self.dist)

    def path_to(self, target: Simplex) -> DPath | None:
        if target not in self.dist:
            return None
        simplices = [target]
        via = []
        cur = target
        while cur != self.source:
            p = self.pred[cur]
            via.append(p.via)
            simplices.append(p.simplex)
            cur = p.simplex
        simplices.reverse()
        via.reverse()
        return DPath(tuple(simplices), tuple(via), self.dist[target])


@dataclass(frozen=True)
class DPath:
    simplices: tuple[Simplex, ...]
    via: tuple[Simplex, ...]
    total: float

    @property
    def length(self) -> int:
        return len(self.via)


class PathCheck(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _search(X: WeightedComplex, source: Simplex, target: Simplex | None) -> DistanceMap:
    inc = X.incidence
    dist: dict[Simplex, float] = {}
    tentative: dict[Simplex, float] = {source: 0.0}
    pred: dict[Simplex, Pred] = {}
    heap: list[tuple[float, Simplex]] = [(0.0, source)]
    while heap:
        t, s = heappop(heap)
        if s in dist:
            continue
        dist[s] = t
        if s == target:
            break
        for w, tau, fs in inc.get(s, ()):
            nt = t + w
            for f in fs:
                if f in dist:
                    continue
                old = tentative.get(f)
                if old is None or nt < old:
                    tentative[f] = nt
                    pred[f] = Pred(s, tau)
                    heappush(heap, (nt, f))
    if target is not None:
        pred = {k: v for k, v in pred.items() if k in dist}
    return DistanceMap(source, dist, pred)


def sssp(X: WeightedComplex, source: Iterable[int]) -> DistanceMap:
    """Shortest d-path distances from ``source`` to every (d-1)-simplex.

    Raises InvalidWeights if any weight is negative, NaN or infinite, and
    InvalidSimplex for a malformed complex or source.
    """
    require_valid(X)
    return _search(X, X.check_simplex(source), None)


def shortest_path(X: WeightedComplex, source: Iterable[int], target: Iterable[int]) -> DPath | None:
    """A minimum-weight d-path from ``source`` to ``target``, or None if unreachable.

    The search stops as soon as ``target`` is finalized.
    """
    require_valid(X)
    s = X.check_simplex(source)
    t = X.check_simplex(target)
    return _search(X, s, t).path_to(t)


def is_d_path(X: WeightedComplex, simplices: Sequence[Iterable[int]]) -> PathCheck:
    """Check ``simplices`` against the d-path definition.

    The (d-1)-simplices must be pairwise distinct, every consecutive union must
    be a d-simplex of X, and those d-simplices must be pairwise distinct. The
    reason names the first clause that fails.
    """
    if not simplices:
        return PathCheck(False, "empty sequence")
    seq = []
    for i, raw in enumerate(simplices):
        s = tuple(sorted(raw))
        if len(s) != X.d or len(set(s)) != X.d:
            return PathCheck(False, f"element {i} {s} is not a {X.d - 1}-simplex")
        seq.append(s)
    if len(set(seq)) != len(seq):
        return PathCheck(False, "repeated (d-1)-simplex")
    used = set()
    for i in range(len(seq) - 1):
        tau = tuple(sorted(set(seq[i]) | set(seq[i + 1])))
        if tau not in X.top:
            return PathCheck(False, f"union of elements {i} and {i + 1} is not in X^d")
        if tau in used:
            return PathCheck(False, f"d-simplex {tau} used twice")
        used.add(tau)
    return PathCheck(True, "ok")
