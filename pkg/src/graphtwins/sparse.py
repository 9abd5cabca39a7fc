"""Twins in sparse graphs by reserving a balancing kit before extraction.

The pipeline:

1. drop every vertex of degree at least ``x = 2e / (n f)`` where
   ``f = sqrt(e) lg n / n`` (at most ``n f`` of them);
2. in what is left, greedily reserve ``l = 2 ceil(lg n)^2`` pairwise
   non-adjacent edges and then ``2 l`` independent vertices, each time
   discarding the closed neighbourhood of what was taken;
3. run :func:`~graphtwins.discrepancy.almost_twins_extraction` on the
   untouched vertices ``S``, giving a pair with discrepancy ``gamma``;
4. pad the side with more edges by ``2 gamma`` reserved vertices and the
   other side by ``gamma`` reserved edges. Nothing reserved touches ``S``, so
   this closes the gap exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .discrepancy import almost_twins_extraction, almost_twins_local_search
from .errors import InternalInvariantError, PreconditionError
from .graph import Graph, TwinPair

MIN_VERTICES = 16
MIN_EDGES = 4

FALLBACK_NONE = None
FALLBACK_INDEPENDENT = "independent_remainder"
FALLBACK_LOCAL_SEARCH = "local_search"


@dataclass
class SparseTrace:
    f: float
    x_threshold: float
    l: int
    high_set: tuple[int, ...] = ()
    matching: list[tuple[int, int]] = field(default_factory=list)
    singles: list[int] = field(default_factory=list)
    untouched: tuple[int, ...] = ()
    gamma: int = 0
    bound: float = 0.0
    fallback: str | None = FALLBACK_NONE
    not_twins: bool = False

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "x_threshold": self.x_threshold,
            "l": self.l,
            "high_set": list(self.high_set),
            "matching": [list(e) for e in self.matching],
            "singles": list(self.singles),
            "untouched": list(self.untouched),
            "gamma": self.gamma,
            "bound": self.bound,
            "fallback": self.fallback,
            "not_twins": self.not_twins,
        }


def sparse_parameters(n: int, e: int) -> tuple[float, float, int]:
    """``(f, x, l)`` for a graph with ``n`` vertices and ``e`` edges."""
    lg = math.log2(n)
    f = math.sqrt(e) * lg / n
    x = 2 * e / (n * f)
    l = 2 * math.ceil(lg) ** 2
    return f, x, l


def sparse_bound(n: int, e: int) -> float:
    f, _, _ = sparse_parameters(n, e)
    return n / 2 * (1 - 20 * f)


def _reserve(g: Graph, available: set[int], l: int) -> tuple[list[tuple[int, int]], list[int], list[int] | None]:
    """Greedy lexicographic reservation; mutates ``available``.

    Returns ``(matching, singles, remainder)`` where ``remainder`` is the
    (independent) set of vertices left when fewer than ``l`` edges could be
    found, and ``None`` otherwise.
    """
    matching: list[tuple[int, int]] = []
    remainder = None
    while len(matching) < l:
        edge = next(((u, v) for u, v in g.edges if u in available and v in available), None)
        if edge is None:
            remainder = sorted(available)
            break
        matching.append(edge)
        for end in edge:
            available.difference_update(g.closed_neighborhood(end))
    singles: list[int] = []
    while len(singles) < 2 * l and available:
        v = min(available)
        singles.append(v)
        available.difference_update(g.closed_neighborhood(v))
    return matching, singles, remainder


def sparse_twins(g: Graph) -> tuple[TwinPair, SparseTrace]:
    """Twins of size at least ``n/2 (1 - 20 f)`` in a sparse graph.

    Raises :class:`PreconditionError` unless ``e >= 4`` and ``n >= 16``.
    The result has discrepancy 0 unless the trace says ``not_twins``.
    """
    if g.m < MIN_EDGES or g.n < MIN_VERTICES:
        raise PreconditionError(f"sparse_twins needs e >= {MIN_EDGES} and n >= {MIN_VERTICES} (got e={g.m}, n={g.n})")
    n, e = g.n, g.m
    f, x, l = sparse_parameters(n, e)
    trace = SparseTrace(f=f, x_threshold=x, l=l, bound=sparse_bound(n, e))

    high = tuple(v for v in range(n) if g.degree(v) >= x)
    if len(high) > n * f + 1e-9:
        raise InternalInvariantError(f"{len(high)} high-degree vertices exceed n*f = {n * f}")
    trace.high_set = high
    rest = g.without(high)
    available = set(range(n)) - set(high)
    matching, singles, remainder = _reserve(rest, available, l)
    untouched = tuple(sorted(available))
    trace.matching, trace.singles, trace.untouched = matching, singles, untouched
    reserved = {v for edge in matching for v in edge} | set(singles)
    if any((u in reserved and v in available) or (v in reserved and u in available) for u, v in rest.edges):
        raise InternalInvariantError("a reserved vertex is adjacent to the untouched region")

    balanced = _balanced_pair(g, untouched, matching, singles, trace)
    if remainder is not None:
        # the greedy ran out of edges: what was left is independent, and
        # any two halves of it are twins
        half = len(remainder) // 2
        halves = TwinPair.of(g, remainder[:half], remainder[half:2 * half])
        if balanced is None or halves.size > balanced.size:
            trace.fallback = FALLBACK_INDEPENDENT
            return halves, trace
        return balanced, trace
    if balanced is None:
        trace.fallback = FALLBACK_LOCAL_SEARCH
        pair, _ = almost_twins_local_search(g)
        trace.not_twins = not pair.is_twins
        return pair, trace
    return balanced, trace


def _balanced_pair(g: Graph, untouched, matching, singles, trace: SparseTrace) -> TwinPair | None:
    if len(untouched) >= 2:
        sub, new_to_old = g.induced(untouched)
        inner, _ = almost_twins_extraction(sub)
        a = [new_to_old[v] for v in inner.a]
        b = [new_to_old[v] for v in inner.b]
    else:
        a, b = [], []
    inner_pair = TwinPair.of(g, a, b)
    ea, eb = inner_pair.edges_a, inner_pair.edges_b
    if ea < eb:
        a, b, ea, eb = b, a, eb, ea
    gamma = ea - eb
    trace.gamma = gamma
    if gamma > len(matching) or 2 * gamma > len(singles):
        return None
    a = a + list(singles[:2 * gamma])
    b = b + [v for edge in matching[:gamma] for v in edge]
    pair = TwinPair.of(g, a, b)
    if not pair.is_twins:
        raise InternalInvariantError(f"reserve padding left e(A)={pair.edges_a}, e(B)={pair.edges_b}")
    return pair
