"""Property checks over small random complexes."""

import math
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from scxpath import WeightedComplex, degree, facets, is_d_path, neighbors, shortest_path, sssp
from scxpath.oracle import brute_force_distance, dual_graph, graph_dijkstra


@st.composite
def complexes(draw, max_n=6, min_weight=0):
    d = draw(st.integers(1, 3))
    n = draw(st.integers(d + 1, max(d + 1, max_n)))
    candidates = list(combinations(range(1, n + 1), d + 1))
    chosen = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=14))
    weights = draw(st.lists(st.integers(min_weight, 9), min_size=len(chosen), max_size=len(chosen)))
    return WeightedComplex(d, n, dict(zip(chosen, weights)))


def incident(X):
    return sorted(X.incidence)


@given(complexes())
def test_neighbor_count_is_d_times_degree(X):
    for s in incident(X):
        assert len(neighbors(X, s)) == X.d * degree(X, s)


@given(complexes())
def test_neighbors_symmetric_and_unique_via(X):
    for s in incident(X):
        recs = neighbors(X, s)
        assert len({r.neighbor for r in recs}) == len(recs)
        for r in recs:
            back = [b for b in neighbors(X, r.neighbor) if b.neighbor == s]
            assert [b.via for b in back] == [r.via]
            assert tuple(sorted(set(s) | set(r.neighbor))) == r.via


@given(st.integers(1, 6).flatmap(lambda k: st.lists(st.integers(1, 30), min_size=k, max_size=k, unique=True)))
def test_facets_shape(vs):
    tau = tuple(sorted(vs))
    fs = facets(tau)
    assert len(fs) == len(tau) == len(set(fs))
    assert all(len(f) == len(tau) - 1 for f in fs)
    if len(tau) > 1:
        assert set().union(*map(set, fs)) == set(tau)


@settings(max_examples=60, deadline=None)
@given(complexes(min_weight=0))
def test_matches_oracle_with_zero_weights(X):
    fs = incident(X)
    for s in fs[:4]:
        dm = sssp(X, s)
        for t in fs:
            assert dm[t] == brute_force_distance(X, s, t)


@given(complexes(max_n=7))
def test_matches_dual_graph_dijkstra(X):
    labels, edges = dual_graph(X)
    for i, s in enumerate(labels[:5], start=1):
        ref = graph_dijkstra(len(labels), edges, i)
        dm = sssp(X, s)
        assert {labels[v - 1]: t for v, t in ref.items() if t < math.inf} == dict(dm.dist)


@given(complexes())
def test_metric_axioms(X):
    fs = incident(X)
    table = {s: sssp(X, s) for s in fs}
    for a in fs:
        assert table[a][a] == 0
        for b in fs:
            assert table[a][b] == table[b][a]
            for c in fs:
                if math.isfinite(table[a][b]) and math.isfinite(table[b][c]):
                    assert table[a][c] <= table[a][b] + table[b][c]


@given(complexes())
def test_extraction_monotone(X):
    for s in incident(X)[:3]:
        values = list(sssp(X, s).dist.values())
        assert values == sorted(values)


@given(complexes())
def test_paths_sound(X):
    fs = incident(X)
    for s in fs[:3]:
        dm = sssp(X, s)
        for t in fs:
            path = shortest_path(X, s, t)
            if path is None:
                assert dm[t] == math.inf
                continue
            assert is_d_path(X, path.simplices)
            assert path.total == dm[t] == sum(X.top[v] for v in path.via)
            assert path.simplices[0] == s and path.simplices[-1] == t


@given(complexes(), st.data())
def test_deleting_a_simplex_never_shortens(X, data):
    if X.m == 0:
        return
    drop = data.draw(st.sampled_from(sorted(X.top)))
    Y = WeightedComplex(X.d, X.n, {k: w for k, w in X.top.items() if k != drop})
    for s in incident(X)[:3]:
        before, after = sssp(X, s), sssp(Y, s)
        for t in incident(X):
            assert after[t] >= before[t]


@given(complexes())
def test_deterministic(X):
    for s in incident(X)[:2]:
        a, b = sssp(X, s), sssp(X, s)
        assert list(a.dist.items()) == list(b.dist.items())
        assert a.pred == b.pred


@given(complexes())
def test_input_order_does_not_change_output(X):
    shuffled = WeightedComplex(X.d, X.n, {tuple(reversed(k)): w for k, w in reversed(list(X.top.items()))})
    for s in incident(X)[:2]:
        assert sssp(X, s).pred == sssp(shuffled, s).pred
