import math
import random

import pytest

from graphtwins.errors import PreconditionError
from graphtwins.generators import gen_gnp, grid_graph
from graphtwins.graph import Graph, check_twins
import graphtwins.sparse as sparse_mod
from graphtwins.graph import TwinPair
from graphtwins.sparse import (
    FALLBACK_INDEPENDENT,
    FALLBACK_LOCAL_SEARCH,
    SparseTrace,
    _balanced_pair,
    sparse_bound,
    sparse_parameters,
    sparse_twins,
)


def check_trace(g, trace):
    n, e = g.n, g.m
    f = math.sqrt(e) * math.log2(n) / n
    assert math.isclose(trace.f, f, rel_tol=1e-9)
    assert math.isclose(trace.x_threshold, 2 * e / (n * f), rel_tol=1e-9)
    assert trace.l == 2 * math.ceil(math.log2(n)) ** 2
    assert math.isclose(trace.bound, n / 2 * (1 - 20 * f), rel_tol=1e-9, abs_tol=1e-9)
    assert all(g.degree(v) >= trace.x_threshold for v in trace.high_set)
    assert all(g.degree(v) < trace.x_threshold for v in range(n) if v not in trace.high_set)
    assert len(trace.high_set) <= n * f + 1e-9
    rest = g.without(trace.high_set)
    reserved = [v for edge in trace.matching for v in edge] + list(trace.singles)
    assert len(reserved) == len(set(reserved))
    for edge in trace.matching:
        assert rest.has_edge(*edge)
    # nothing reserved touches anything else reserved except its own matching partner
    partner = {u: v for u, v in trace.matching} | {v: u for u, v in trace.matching}
    for x in reserved:
        for y in reserved:
            if x != y and partner.get(x) != y:
                assert not rest.has_edge(x, y)
    for u, v in rest.edges:
        assert not ((u in reserved and v in trace.untouched) or (v in reserved and u in trace.untouched))


def test_preconditions():
    with pytest.raises(PreconditionError):
        sparse_twins(Graph(16, [(0, 1), (2, 3), (4, 5)]))
    with pytest.raises(PreconditionError):
        sparse_twins(Graph(15, [(0, 1), (2, 3), (4, 5), (6, 7)]))


def test_grid_5x5():
    g = grid_graph(5, 5)
    pair, trace = sparse_twins(g)
    assert check_twins(g, pair.a, pair.b).valid and pair.disc == 0
    assert trace.bound < 0
    check_trace(g, trace)


def test_four_disjoint_edges():
    g = Graph(16, [(0, 1), (2, 3), (4, 5), (6, 7)])
    pair, trace = sparse_twins(g)
    assert check_twins(g, pair.a, pair.b).valid
    assert trace.fallback == FALLBACK_INDEPENDENT
    # every endpoint has degree 1 >= x = 1, so all eight are set aside
    assert trace.high_set == tuple(range(8))
    assert pair.size == 4
    check_trace(g, trace)


def test_gnp_64():
    g = gen_gnp(64, 0.05, 3)
    pair, trace = sparse_twins(g)
    assert pair.disc == 0 and check_twins(g, pair.a, pair.b).valid
    if trace.bound > 0:
        assert pair.size >= trace.bound
    check_trace(g, trace)


@pytest.mark.parametrize("seed", range(30))
def test_random_sparse(seed):
    rng = random.Random(seed)
    n = rng.randint(16, 120)
    g = gen_gnp(n, rng.uniform(1, 4) / n, seed)
    if g.m < 4:
        return
    pair, trace = sparse_twins(g)
    assert check_twins(g, pair.a, pair.b).valid or trace.not_twins
    check_trace(g, trace)
    d = trace.to_dict()
    assert set(d) >= {"f", "x_threshold", "l", "high_set", "matching", "singles", "untouched", "gamma", "bound"}


def test_balancing_step_closes_the_gap():
    # a path on the untouched side, two reserved edges, four reserved singles
    g = Graph(16, [(0, 1), (1, 2), (2, 3), (10, 11), (12, 13)])
    trace = SparseTrace(f=0.0, x_threshold=0.0, l=2)
    pair = _balanced_pair(g, (0, 1, 2, 3), [(10, 11), (12, 13)], [4, 5, 6, 7], trace)
    assert pair is not None and pair.is_twins


def _fake_extraction(sub):
    # sides {0, 1, 2} (a triangle) and {3, 4, 5} (edgeless): gap 3
    return TwinPair.of(sub, [0, 1, 2], [3, 4, 5]), None


def test_balancing_uses_the_reserve(monkeypatch):
    monkeypatch.setattr(sparse_mod, "almost_twins_extraction", _fake_extraction)
    g = Graph(20, [(0, 1), (1, 2), (0, 2), (10, 11), (12, 13), (14, 15)])
    trace = SparseTrace(f=0.0, x_threshold=0.0, l=3)
    pair = _balanced_pair(g, tuple(range(6)), [(10, 11), (12, 13), (14, 15)], [6, 7, 8, 9, 16, 17], trace)
    assert trace.gamma == 3
    assert pair.is_twins and pair.size == 9
    assert set(pair.a) >= {6, 7, 8, 9, 16, 17}


def test_balancing_reports_exhausted_reserve(monkeypatch):
    monkeypatch.setattr(sparse_mod, "almost_twins_extraction", _fake_extraction)
    g = Graph(20, [(0, 1), (1, 2), (0, 2), (10, 11)])
    trace = SparseTrace(f=0.0, x_threshold=0.0, l=1)
    assert _balanced_pair(g, tuple(range(6)), [(10, 11)], [6, 7], trace) is None
    assert trace.gamma == 3


def test_local_search_fallback_is_flagged(monkeypatch):
    monkeypatch.setattr(sparse_mod, "_balanced_pair", lambda *args: None)
    g = gen_gnp(400, 0.004, 1)
    pair, trace = sparse_twins(g)
    if trace.fallback == FALLBACK_LOCAL_SEARCH:
        assert trace.not_twins == (pair.disc != 0)
        assert pair.size == g.n // 2
    else:
        # the greedy ran out of edges first, so the independent halves answer
        assert trace.fallback == FALLBACK_INDEPENDENT and pair.is_twins


def test_parameters():
    f, x, l = sparse_parameters(64, 100)
    assert math.isclose(f, 10 * 6 / 64)
    assert math.isclose(x, 200 / (64 * f))
    assert l == 72
    assert sparse_bound(64, 100) < 0


def test_main_path_without_fallback():
    g = gen_gnp(1000, 0.002, 0)
    pair, trace = sparse_twins(g)
    assert trace.fallback is None and not trace.not_twins
    assert len(trace.matching) == trace.l
    assert trace.gamma <= trace.l
    assert pair.is_twins
    check_trace(g, trace)
