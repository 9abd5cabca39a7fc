"""Simple undirected graphs, induced edge counts and the twin checker.

Vertices are the integers ``0 .. n-1``. Every vertex set returned by this
package is a sorted tuple so results compare equal across runs.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .errors import GraphParseError

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on ``range(n)``."""

    __slots__ = ("n", "edges", "_adj", "_deg", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._deg: tuple[int, ...] = tuple(len(a) for a in adj)
        self._masks: tuple[int, ...] | None = None

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if self._deg[u] <= self._deg[v] else (v, u)
        return b in self._adj[a]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v]) | {v}

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``j`` set iff ``j`` is adjacent)."""
        if self._masks is None:
            masks = []
            for nbrs in self._adj:
                mask = 0
                for j in nbrs:
                    mask |= 1 << j
                masks.append(mask)
            self._masks = tuple(masks)
        return self._masks

    # -- derived graphs ------------------------------------------------
    def without(self, vertices: Iterable[int]) -> Graph:
        """``G - W`` keeping the vertex labels: edges touching ``W`` are dropped."""
        drop = set(vertices)
        return Graph(self.n, (e for e in self.edges if e[0] not in drop and e[1] not in drop))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns new-to-old labels."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), sub_edges), keep

    def is_forest(self) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TwinPair:
    """Two disjoint equal-size vertex sets with their induced edge counts."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    edges_a: int
    edges_b: int

    @classmethod
    def of(cls, g: Graph, a: Iterable[int], b: Iterable[int]) -> TwinPair:
        sa, sb = tuple(sorted(set(a))), tuple(sorted(set(b)))
        if set(sa) & set(sb):
            raise ValueError("twin sides overlap")
        if len(sa) != len(sb):
            raise ValueError(f"twin sides differ in size ({len(sa)} vs {len(sb)})")
        return cls(sa, sb, induced_edge_count(g, sa), induced_edge_count(g, sb))

    @property
    def size(self) -> int:
        return len(self.a)

    @property
    def disc(self) -> int:
        return abs(self.edges_a - self.edges_b)

    @property
    def is_twins(self) -> bool:
        return self.disc == 0

    def swapped(self) -> TwinPair:
        return TwinPair(self.b, self.a, self.edges_b, self.edges_a)


@dataclass(frozen=True)
class DegreeProfile:
    classes: dict[int, tuple[int, ...]] = field(default_factory=dict)
    min_degree: int | None = None
    max_degree: int | None = None

    def __getitem__(self, d: int) -> tuple[int, ...]:
        return self.classes.get(d, ())


@dataclass(frozen=True)
class TwinCheck:
    valid: bool
    violations: tuple[str, ...] = ()


OVERLAP = "overlap"
SIZE_MISMATCH = "size-mismatch"
EDGE_COUNT_MISMATCH = "edge-count-mismatch"
OUT_OF_RANGE = "out-of-range"


def _vertex_set(g: Graph, s: Iterable[int]) -> set[int]:
    out = set(s)
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return out


def induced_edge_count(g: Graph, s: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``s``."""
    members = _vertex_set(g, s)
    total = 0
    for v in members:
        total += sum(1 for w in g.neighbors(v) if w in members)
    return total // 2


def cross_edge_count(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """Number of edges with one endpoint in ``s`` and the other in ``t``."""
    ss, tt = _vertex_set(g, s), _vertex_set(g, t)
    if ss & tt:
        raise ValueError("cross_edge_count needs disjoint sets")
    if len(tt) < len(ss):
        ss, tt = tt, ss
    return sum(1 for v in ss for w in g.neighbors(v) if w in tt)


def degree_sum(host: Graph, s: Iterable[int]) -> int:
    """``d(host, S)``: sum of the degrees in ``host`` of the vertices of ``s``."""
    return sum(host.degree(v) for v in s)


def check_twins(g: Graph, a: Iterable[int], b: Iterable[int]) -> TwinCheck:
    """Report every way in which ``(a, b)`` fails to be twins in ``g``."""
    la, lb = list(a), list(b)
    sa, sb = set(la), set(lb)
    violations: list[str] = []
    if any(not 0 <= v < g.n for v in sa | sb):
        violations.append(OUT_OF_RANGE)
    if sa & sb:
        violations.append(OVERLAP)
    if len(sa) != len(sb) or len(la) != len(sa) or len(lb) != len(sb):
        violations.append(SIZE_MISMATCH)
    if OUT_OF_RANGE not in violations:
        if induced_edge_count(g, sa) != induced_edge_count(g, sb):
            violations.append(EDGE_COUNT_MISMATCH)
    return TwinCheck(not violations, tuple(violations))


def degree_profile(g: Graph) -> DegreeProfile:
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees):
        classes.setdefault(d, []).append(v)
    if not classes:
        return DegreeProfile()
    frozen = {d: tuple(vs) for d, vs in sorted(classes.items())}
    return DegreeProfile(frozen, min(frozen), max(frozen))


# -- edge-list text format --------------------------------------------

def parse_graph(text: str | TextIO) -> Graph:
    """Parse the edge-list format: ``n m`` then ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if x < 0 or y < 0:
                raise GraphParseError("vertex and edge counts must be non-negative", lineno)
            header = (x, y)
            continue
        n = header[0]
        if len(edges) >= header[1]:
            raise GraphParseError(f"more than the declared {header[1]} edges", lineno)
        if x == y:
            raise GraphParseError(f"self-loop at vertex {x}", lineno)
        if not (0 <= x < n and 0 <= y < n):
            raise GraphParseError(f"endpoint out of range 0..{n - 1} in {line!r}", lineno)
        key = (x, y) if x < y else (y, x)
        if key in seen:
            raise GraphParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphParseError(f"declared {header[1]} edges but found {len(edges)}")
    return Graph(header[0], edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
