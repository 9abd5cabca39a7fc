"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here imports the package under test except :class:`Graph` for
construction; every count is recomputed from the raw edge list.
"""

from __future__ import annotations

import math
from itertools import combinations

import networkx as nx

from graphtwins.graph import Graph


def edges_in(edges, s) -> int:
    s = set(s)
    return sum(1 for u, v in edges if u in s and v in s)


def twin_size_exists(n: int, edges, k: int) -> bool:
    for a in combinations(range(n), k):
        ea = edges_in(edges, a)
        rest = [v for v in range(n) if v not in a and v > a[0]]
        for b in combinations(rest, k):
            if edges_in(edges, b) == ea:
                return True
    return False


def t_ascending(g: Graph) -> int:
    """t(G) by trying sizes upward; the opposite order to the package oracle."""
    best = 0
    for k in range(1, g.n // 2 + 1):
        if twin_size_exists(g.n, g.edges, k):
            best = k
    return best


def min_disc_half(g: Graph) -> int:
    n, half = g.n, g.n // 2
    best = math.inf
    for omit in ([None] if n % 2 == 0 else range(n)):
        pool = [v for v in range(n) if v != omit]
        for a in combinations(pool, half):
            b = [v for v in pool if v not in a]
            best = min(best, abs(edges_in(g.edges, a) - edges_in(g.edges, b)))
    return 0 if best is math.inf else best


def balanced_halving_exists(x) -> bool:
    m = len(x)
    total = sum(x)
    for part in combinations(range(m), m // 2):
        s = sum(x[i] for i in part)
        if abs(2 * s - total) <= 1:
            return True
    return False


def to_graph(t: nx.Graph, perm=None) -> Graph:
    n = t.number_of_nodes()
    perm = perm or list(range(n))
    return Graph(n, [(perm[u], perm[v]) for u, v in t.edges()])


def free_trees(n: int):
    """All free trees on ``n`` vertices up to isomorphism."""
    if n == 1:
        return [Graph(1)]
    return [to_graph(t) for t in nx.nonisomorphic_trees(n)]


def is_forest(g: Graph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.is_forest(h) if g.n else True
