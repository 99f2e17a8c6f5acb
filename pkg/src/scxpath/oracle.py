"""Reference implementations for cross-checking the shortest-path search.

Nothing here is fast. ``brute_force_distance`` works straight from the d-path
definition and ``graph_dijkstra`` is the textbook vertex-indexed algorithm;
neither touches the incidence index or the search in :mod:`scxpath.paths`.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

from .complex import WeightedComplex
from .errors import InstanceTooLarge, InvalidSimplex, InvalidWeights

DEFAULT_BUDGET = 10**7


def _adjacency(X: WeightedComplex) -> dict[tuple, list[tuple[float, tuple, tuple]]]:
    adj: dict[tuple, list[tuple[float, tuple, tuple]]] = {}
    for tau, w in X.top.items():
        if math.isnan(w) or w < 0:
            raise InvalidWeights(f"weight {w} on {tau}")
        for a, b in combinations(combinations(tau, len(tau) - 1), 2):
            adj.setdefault(a, []).append((w, b, tau))
            adj.setdefault(b, []).append((w, a, tau))
    for lst in adj.values():
        lst.sort()
    return adj


def _fewest_hops(adj, source, target):
    """A minimum-hop route as ``(simplices, taus)``, or None.

    A walk with the fewest steps never repeats a (d-1)-simplex, and never
    repeats a d-simplex either (two facets of one d-simplex are adjacent, so a
    repeat could be cut short), so this is a d-path whenever it exists.
    """
    prev = {source: None}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        if s == target:
            break
        for _, f, tau in adj.get(s, ()):
            if f not in prev:
                prev[f] = (s, tau)
                queue.append(f)
    if target not in prev:
        return None
    simplices, taus = [target], []
    while prev[simplices[-1]] is not None:
        s, tau = prev[simplices[-1]]
        simplices.append(s)
        taus.append(tau)
    return simplices[::-1], taus[::-1]


def brute_force_distance(
    X: WeightedComplex,
    source: Iterable[int],
    target: Iterable[int],
    budget: int = DEFAULT_BUDGET,
) -> float:
    """Minimum total weight over all d-paths from ``source`` to ``target``.

    Depth-first enumeration of sequences with distinct (d-1)-simplices and
    distinct d-simplices. A branch is cut once its cost, plus the smallest
    weight when the target is not yet reached, can no longer beat the best
    complete d-path found so far (seeded with a fewest-hop d-path).
    Returns ``math.inf`` when no d-path exists. Raises InstanceTooLarge once
    more than ``budget`` nodes have been expanded.
    """
    src = tuple(sorted(source))
    dst = tuple(sorted(target))
    for s in (src, dst):
        if len(s) != X.d or len(set(s)) != X.d or s[0] < 1 or s[-1] > X.n:
            raise InvalidSimplex(f"{s} is not a {X.d - 1}-simplex over 1..{X.n}")
    if src == dst:
        return 0.0
    adj = _adjacency(X)
    route = _fewest_hops(adj, src, dst)
    if route is None:
        return math.inf

    simplices, taus = route
    if len(set(simplices)) != len(simplices) or len(set(taus)) != len(taus):
        raise AssertionError("fewest-hop route is not a d-path")
    best = sum(X.top[t] for t in taus)
    w_min = min(X.top.values())

    on_path = {src}
    used = set()
    expanded = 0
    # explicit stack of (simplex, cost, iterator over its neighbors)
    stack = [(src, 0.0, iter(adj.get(src, ())))]
    while stack:
        s, cost, it = stack[-1]
        step = next(it, None)
        if step is None:
            stack.pop()
            on_path.discard(s)
            if stack:
                used.discard(_via_of(stack[-1][0], s))
            continue
        w, f, tau = step
        if f in on_path or tau in used:
            continue
        c = cost + w
        if c >= best:
            continue
        if f == dst:
            best = c
            continue
        if c + w_min >= best:
            continue
        expanded += 1
        if expanded > budget:
            raise InstanceTooLarge(f"more than {budget} expansions")
        on_path.add(f)
        used.add(tau)
        stack.append((f, c, iter(adj.get(f, ()))))
    return best


def _via_of(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(set(a) | set(b)))


def graph_dijkstra(
    vertices: int,
    edges: Sequence[tuple[int, int, float]],
    source: int,
) -> dict[int, float]:
    """Distances from ``source`` in an undirected graph on ``1..vertices``.

    Unreachable vertices map to ``math.inf``.
    """
    adj: list[list[tuple[int, float]]] = [[] for _ in range(vertices + 1)]
    for u, v, w in edges:
        if math.isnan(w) or w < 0:
            raise InvalidWeights(f"edge ({u}, {v}) has weight {w}")
        adj[u].append((v, w))
        adj[v].append((u, w))
    d = [math.inf] * (vertices + 1)
    done = [False] * (vertices + 1)
    d[source] = 0.0
    pq = [(0.0, source)]
    while pq:
        du, u = heapq.heappop(pq)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            if du + w < d[v]:
                d[v] = du + w
                heapq.heappush(pq, (d[v], v))
    return {v: d[v] for v in range(1, vertices + 1)}


def dual_graph(X: WeightedComplex) -> tuple[list[tuple], list[tuple[int, int, float]]]:
    """The dual graph of ``X`` with (d-1)-simplices numbered from 1.

    Returns ``(labels, edges)`` where ``labels[i - 1]`` is the simplex for
    vertex ``i``. Only incident (d-1)-simplices appear.
    """
    labels = sorted({f for tau in X.top for f in combinations(tau, len(tau) - 1)})
    index = {f: i + 1 for i, f in enumerate(labels)}
    edges = []
    for tau, w in X.top.items():
        for a, b in combinations(combinations(tau, len(tau) - 1), 2):
            edges.append((index[a], index[b], w))
    return labels, edges
