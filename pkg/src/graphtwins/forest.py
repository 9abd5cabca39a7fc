"""Twins in forests: good twins by leaf-stripping induction, then assembly.

:func:`good_twins` peels a vertex ``u`` together with its pendant leaves
until no edge is left, then re-inserts the peeled stars in reverse order and
repairs the colouring case by case. The colouring keeps the following
("good twins") structure after every re-insertion:

1. every uncoloured vertex has degree at most one;
2. no coloured vertex is isolated in the coloured graph;
3. only the vertices of a set ``S`` of at most two red (side ``a``)
   vertices have uncoloured neighbours;
4. ``S`` has at most one leaf and at most one non-leaf of the coloured graph;
5. a non-leaf ``w`` in ``S`` has at most one red neighbour;
6. if ``S = {v, w}`` with ``v`` a leaf, ``v`` has fewer uncoloured
   neighbours than ``w``;

and ``(a, b)`` are twins throughout. :func:`forest_twins` turns good twins
into twins covering all but at most two vertices.

Every step is logged; :func:`replay_good_twins` re-executes a log and checks
the twin property after each atomic step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InternalInvariantError, PreconditionError
from .graph import Graph, TwinPair, check_twins

# violation codes returned by is_good, one per structural condition
UNCOLORED_DEGREE = "uncolored-degree"
ISOLATED_COLORED = "isolated-colored"
EXCEPTIONAL_SET = "exceptional-set"
EXCEPTIONAL_COMPOSITION = "exceptional-composition"
NONLEAF_RED_NEIGHBORS = "nonleaf-red-neighbors"
LEAF_NONLEAF_ORDER = "leaf-nonleaf-order"
NOT_TWINS = "not-twins"


@dataclass(frozen=True)
class MoveRecord:
    x: int
    y: int
    moved_to_x_side: tuple[int, ...]
    moved_to_y_side: tuple[int, ...]


@dataclass(frozen=True)
class GoodTwinColoring:
    """Partial 2-colouring ``(a, b)`` of ``host`` (a forest)."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    host: Graph
    trace: tuple[dict, ...] = ()

    @property
    def colored(self) -> frozenset[int]:
        return frozenset(self.a) | frozenset(self.b)

    @property
    def uncolored(self) -> tuple[int, ...]:
        col = self.colored
        return tuple(v for v in range(self.host.n) if v not in col)

    def uncolored_neighbors(self, v: int) -> tuple[int, ...]:
        col = self.colored
        return tuple(w for w in self.host.neighbors(v) if w not in col)

    @property
    def exceptional(self) -> tuple[int, ...]:
        """Coloured vertices with at least one uncoloured neighbour."""
        return tuple(v for v in sorted(self.colored) if self.uncolored_neighbors(v))

    def colored_degree(self, v: int) -> int:
        col = self.colored
        return sum(1 for w in self.host.neighbors(v) if w in col)

    def pair(self) -> TwinPair:
        return TwinPair.of(self.host, self.a, self.b)


@dataclass
class AssemblyTrace:
    isolated_edges: list[tuple[int, int]] = field(default_factory=list)
    s1: tuple[int, ...] = ()
    s2: tuple[int, ...] = ()
    s3: tuple[int, ...] = ()
    v: int | None = None
    w: int | None = None
    case_taken: str = ""
    dropped: tuple[int, ...] = ()
    good_twins_trace: tuple[dict, ...] = ()

    def to_dict(self) -> dict:
        return {
            "isolated_edges": [list(e) for e in self.isolated_edges],
            "s1": list(self.s1),
            "s2": list(self.s2),
            "s3": list(self.s3),
            "v": self.v,
            "w": self.w,
            "case_taken": self.case_taken,
            "dropped": list(self.dropped),
            "good_twins": list(self.good_twins_trace),
        }


def is_good(f: Graph, coloring: GoodTwinColoring | tuple[Iterable[int], Iterable[int]]) -> list[str]:
    """Names of the good-twin conditions violated by ``coloring`` in ``f``."""
    if not isinstance(coloring, GoodTwinColoring):
        a, b = coloring
        coloring = GoodTwinColoring(tuple(sorted(a)), tuple(sorted(b)), f)
    a, b = set(coloring.a), set(coloring.b)
    colored = a | b
    out: list[str] = []

    if any(f.degree(v) > 1 for v in range(f.n) if v not in colored):
        out.append(UNCOLORED_DEGREE)
    if any(not any(w in colored for w in f.neighbors(v)) for v in colored):
        out.append(ISOLATED_COLORED)

    def uncolored_count(v: int) -> int:
        return sum(1 for w in f.neighbors(v) if w not in colored)

    def colored_degree(v: int) -> int:
        return sum(1 for w in f.neighbors(v) if w in colored)

    s = [v for v in sorted(colored) if uncolored_count(v)]
    if len(s) > 2 or any(v not in a for v in s):
        out.append(EXCEPTIONAL_SET)
    leaves = [v for v in s if colored_degree(v) <= 1]
    nonleaves = [v for v in s if colored_degree(v) > 1]
    if len(leaves) > 1 or len(nonleaves) > 1:
        out.append(EXCEPTIONAL_COMPOSITION)
    if any(sum(1 for x in f.neighbors(w) if x in a) > 1 for w in nonleaves):
        out.append(NONLEAF_RED_NEIGHBORS)
    if len(leaves) == 1 and len(nonleaves) == 1:
        if uncolored_count(leaves[0]) >= uncolored_count(nonleaves[0]):
            out.append(LEAF_NONLEAF_ORDER)
    if not check_twins(f, a, b).valid:
        out.append(NOT_TWINS)
    return out


# ---------------------------------------------------------------------
# good twins

class _State:
    """Colouring of the currently re-inserted part of the forest."""

    def __init__(self, f: Graph, present: list[bool], check: bool) -> None:
        self.f = f
        self.present = present
        self.check = check
        self.a: set[int] = set()
        self.b: set[int] = set()
        self.ops: list[dict] = []
        self.case = ""

    # -- queries -------------------------------------------------------
    def nbrs(self, v: int) -> list[int]:
        return [w for w in self.f.neighbors(v) if self.present[w]]

    def colored(self, v: int) -> bool:
        return v in self.a or v in self.b

    def L(self, v: int) -> list[int]:
        return [w for w in self.nbrs(v) if not self.colored(w)]

    def is_leaf_colored(self, v: int) -> bool:
        return sum(1 for w in self.nbrs(v) if self.colored(w)) <= 1

    def side_of(self, v: int) -> set[int]:
        return self.a if v in self.a else self.b

    def owners(self) -> list[int]:
        return [v for v in sorted(self.a | self.b) if self.L(v)]

    def edges_in(self, side: set[int]) -> int:
        return sum(1 for v in side for w in self.nbrs(v) if w in side) // 2

    def assert_twins(self, what: str) -> None:
        if len(self.a) != len(self.b) or self.a & self.b or self.edges_in(self.a) != self.edges_in(self.b):
            raise InternalInvariantError(f"case {self.case}: twins broken after {what}")

    # -- atomic steps --------------------------------------------------
    def step(self, op: str, add_a=(), add_b=(), a_to_b=(), b_to_a=(), **meta) -> None:
        for v in a_to_b:
            self.a.remove(v)
            self.b.add(v)
        for v in b_to_a:
            self.b.remove(v)
            self.a.add(v)
        self.a.update(add_a)
        self.b.update(add_b)
        rec = {"op": op, "add_a": sorted(add_a), "add_b": sorted(add_b),
               "a_to_b": sorted(a_to_b), "b_to_a": sorted(b_to_a)}
        rec.update(meta)
        self.ops.append(rec)
        if self.check:
            self.assert_twins(op)

    def color(self, to_a: int, to_b: int) -> None:
        """Colour ``to_a`` red and ``to_b`` blue; neither may gain a same-side edge."""
        self.step("color", add_a=[to_a], add_b=[to_b])

    def recolor(self, v: int, extra_a: list[int]) -> None:
        """Move the coloured-graph leaf ``v`` from red to blue and add ``extra_a`` to red."""
        self.step("recolor", add_a=extra_a, a_to_b=[v])

    def swap_colors(self, red: int, blue: int) -> None:
        self.step("swap_colors", a_to_b=[red], b_to_a=[blue])

    def swap_sides(self) -> None:
        self.a, self.b = self.b, self.a
        self.ops.append({"op": "swap_sides"})

    def move(self, x: int, y: int) -> MoveRecord:
        """The (x, y)-move: trade ``min(|L(x)|, |L(y)|)`` pendant uncoloured neighbours."""
        lx, ly = self.L(x), self.L(y)
        if set(lx) & set(ly):
            raise InternalInvariantError(f"case {self.case}: L({x}) and L({y}) overlap")
        for z in lx + ly:
            if len(self.nbrs(z)) != 1:
                raise InternalInvariantError(f"case {self.case}: move ({x},{y}) would colour non-leaf {z}")
        k = min(len(lx), len(ly))
        to_x_side, to_y_side = tuple(ly[:k]), tuple(lx[:k])
        before = len(self.owners()) if self.check else 0
        x_red = x in self.a
        if x_red == (y in self.a):
            raise InternalInvariantError(f"case {self.case}: move ({x},{y}) on same-coloured vertices")
        if x_red:
            self.step("move", add_a=to_x_side, add_b=to_y_side, x=x, y=y)
        else:
            self.step("move", add_a=to_y_side, add_b=to_x_side, x=x, y=y)
        if self.check and k and len(self.owners()) > before - 1:
            raise InternalInvariantError(f"case {self.case}: move ({x},{y}) did not saturate a vertex")
        return MoveRecord(x, y, to_x_side, to_y_side)


def xy_move(f: Graph, a: Iterable[int], b: Iterable[int], x: int, y: int) -> tuple[tuple[int, ...], tuple[int, ...], MoveRecord]:
    """Apply the (x, y)-move to the partial colouring ``(a, b)`` of ``f``.

    ``x`` and ``y`` must be coloured differently. The lowest
    ``min(|L(x)|, |L(y)|)`` uncoloured neighbours of ``y`` join the side of
    ``x`` and as many of ``x``'s join the side of ``y``. Twin-ness is
    preserved when every traded vertex is a leaf of ``f``; this function
    does not insist on it.
    """
    a, b = set(a), set(b)
    if (x in a) == (y in a) or not ({x, y} <= a | b):
        raise ValueError("x and y must be coloured, on opposite sides")
    colored = a | b
    lx = [w for w in f.neighbors(x) if w not in colored]
    ly = [w for w in f.neighbors(y) if w not in colored]
    if set(lx) & set(ly):
        raise ValueError(f"L({x}) and L({y}) overlap")
    k = min(len(lx), len(ly))
    rec = MoveRecord(x, y, tuple(ly[:k]), tuple(lx[:k]))
    x_side, y_side = (a, b) if x in a else (b, a)
    x_side.update(rec.moved_to_x_side)
    y_side.update(rec.moved_to_y_side)
    return tuple(sorted(a)), tuple(sorted(b)), rec


def _choose_u(f: Graph, present: list[bool], degree: list[int]) -> int | None:
    """Lowest vertex adjacent to at least one leaf and at most one non-leaf."""
    for u in range(f.n):
        if not present[u] or degree[u] == 0:
            continue
        leaves = nonleaves = 0
        for w in f.neighbors(u):
            if present[w]:
                if degree[w] == 1:
                    leaves += 1
                else:
                    nonleaves += 1
        if leaves and nonleaves <= 1:
            return u
    return None


def _peel(f: Graph) -> list[tuple[int, tuple[int, ...]]]:
    present = [True] * f.n
    degree = list(f.degrees)
    frames = []
    while True:
        u = _choose_u(f, present, degree)
        if u is None:
            break
        leaves = tuple(w for w in f.neighbors(u) if present[w] and degree[w] == 1)
        for w in leaves:
            present[w] = False
            degree[w] = 0
            degree[u] -= 1
        frames.append((u, leaves))
    if any(degree):
        raise InternalInvariantError("leaf stripping stalled on a graph with edges left")
    return frames


def _reinsert(st: _State, u: int) -> None:
    """Repair good twins of ``G'`` into good twins of ``G = G' + leaves(u)``."""
    s = [v for v in st.owners() if v != u]
    lu = len(st.L(u))

    if len(s) == 0:
        st.case = "1"
        if not st.colored(u):
            st.color(u, st.L(u)[0])
        return

    if len(s) == 1:
        w = s[0]
        if u in st.b:
            st.case = "2.1"
            st.move(w, u)
        elif not st.colored(u):
            st.case = "2.2"
            st.color(st.L(u)[0], u)
            st.move(w, u)
        else:
            lw = len(st.L(w))
            if lw > lu and not st.is_leaf_colored(w):
                st.case = "2.3-keep"
                return
            st.case = "2.3"
            if lw > lu:
                w, u = u, w
                st.case = "2.3-swapped"
            x, y = st.L(w)[0], st.L(u)[0]
            st.recolor(u, [x, y])
            st.move(w, u)
        return

    if len(s) != 2:
        raise InternalInvariantError(f"{len(s)} coloured vertices with uncoloured neighbours")
    v, w = s
    if not st.is_leaf_colored(v):
        v, w = w, v
    if not st.is_leaf_colored(v) or st.is_leaf_colored(w):
        raise InternalInvariantError("exceptional pair is not one leaf and one non-leaf")
    lv, lw = len(st.L(v)), len(st.L(w))

    if u in st.b:
        if lu >= lv:
            st.case = "3.1.a"
            st.move(v, u)
            st.move(w, u)
        elif w in st.f.neighbors(u) and any(x in st.a for x in st.nbrs(w)):
            # swapping u into red would give w a second red neighbour while
            # w still has pendant vertices; saturate u against w instead
            st.case = "3.1.b-alt"
            st.move(w, u)
            if len(st.L(w)) <= len(st.L(v)):
                z, y = st.L(w)[0], st.L(v)[0]
                st.recolor(v, [z, y])
                st.move(w, v)
        else:
            st.case = "3.1.b"
            st.swap_colors(v, u)
            st.move(u, v)
            st.move(w, v)
    elif u in st.a:
        st.case = "3.4"
        if lu < lv:
            u, v = v, u
            lu, lv = lv, lu
            st.case = "3.4-swapped"
        x, y = st.L(u)[0], st.L(v)[0]
        st.recolor(u, [x, y])
        st.move(v, u)
        st.move(w, u)
    elif u in st.L(v):
        if lv <= lu:
            st.case = "3.3.a"
            st.color(st.L(u)[0], u)
            st.move(v, u)
            st.move(w, u)
        else:
            st.case = "3.3.b"
            x = st.L(u)[0]
            st.recolor(v, [u, x])
            st.move(u, v)
            st.move(w, v)
    else:
        # u hangs off w, or was isolated before its leaves came back. An
        # isolated u is counted in |L(w)| as if it hung off w; otherwise w can
        # keep one pendant neighbour next to a second red neighbour z.
        if u not in st.L(w):
            lw += 1
        if lw <= lu + lv:
            st.case = "3.2.a"
            st.color(st.L(u)[0], u)
            if lw < lu:
                st.move(w, u)
                st.move(v, u)
            else:
                st.case = "3.2.a-recolor"
                lu_now = st.L(u)
                y = lu_now[0] if lu_now else st.L(v)[0]
                z = st.L(w)[0]
                st.recolor(v, [y, z])
                st.move(w, u)
                st.move(w, v)
        else:
            st.case = "3.2.b"
            st.color(st.L(u)[0], u)
            st.move(w, u)


def _normalize(st: _State) -> None:
    s = st.owners()
    if s and all(v in st.b for v in s):
        st.swap_sides()
    elif any(v in st.b for v in s):
        raise InternalInvariantError(f"case {st.case}: uncoloured neighbours on both sides")


def good_twins(f: Graph, check: bool = True) -> GoodTwinColoring:
    """Good twins of the forest ``f``.

    With ``check`` set, twin-ness is verified after every atomic step and the
    full structural predicate after every re-insertion.
    """
    if not f.is_forest():
        raise PreconditionError("good_twins needs an acyclic graph")
    frames = _peel(f)
    present = [True] * f.n
    for _, leaves in frames:
        for w in leaves:
            present[w] = False
    st = _State(f, present, check)
    trace: list[dict] = []
    for u, leaves in reversed(frames):
        for w in leaves:
            present[w] = True
        st.ops = []
        st.case = ""
        _reinsert(st, u)
        _normalize(st)
        trace.append({"u": u, "leaves": list(leaves), "case": st.case, "ops": st.ops})
        if check:
            sub = _present_subgraph(f, present)
            bad = is_good(sub, (st.a, st.b))
            if bad:
                raise InternalInvariantError(f"case {st.case} at u={u} left violations {bad}")
    return GoodTwinColoring(tuple(sorted(st.a)), tuple(sorted(st.b)), f, tuple(trace))


def _present_subgraph(f: Graph, present: list[bool]) -> Graph:
    """``f`` with absent vertices kept as isolated labels (they are uncoloured)."""
    return Graph(f.n, (e for e in f.edges if present[e[0]] and present[e[1]]))


def replay_good_twins(f: Graph, trace: Iterable[dict]) -> GoodTwinColoring:
    """Re-execute a good-twins log, checking each step independently.

    After every atomic step the two sides must be twins in the current
    forest; after every move the number of coloured vertices with uncoloured
    neighbours must not grow (and must shrink when something was traded);
    after every frame the structural predicate must hold.
    """
    frames = list(trace)
    present = [True] * f.n
    for fr in frames:
        for w in fr["leaves"]:
            present[w] = False
    a: set[int] = set()
    b: set[int] = set()

    def owners(g: Graph) -> int:
        col = a | b
        return sum(1 for v in col if any(w not in col for w in g.neighbors(v)))

    for fr in frames:
        for w in fr["leaves"]:
            present[w] = True
        g = _present_subgraph(f, present)
        for op in fr["ops"]:
            if op["op"] == "swap_sides":
                a, b = b, a
                continue
            before = owners(g)
            for v in op["a_to_b"]:
                a.remove(v)
                b.add(v)
            for v in op["b_to_a"]:
                b.remove(v)
                a.add(v)
            a.update(op["add_a"])
            b.update(op["add_b"])
            label = f"frame u={fr['u']} case {fr['case']} op {op['op']}"
            if not check_twins(g, a, b).valid:
                raise InternalInvariantError(f"{label}: not twins")
            if op["op"] == "move":
                after = owners(g)
                traded = len(op["add_a"]) + len(op["add_b"])
                if after > before or (traded and after > before - 1):
                    raise InternalInvariantError(f"{label}: owner count {before} -> {after}")
        bad = is_good(g, (a, b))
        if bad:
            raise InternalInvariantError(f"frame u={fr['u']} case {fr['case']}: violations {bad}")
    return GoodTwinColoring(tuple(sorted(a)), tuple(sorted(b)), f, tuple(frames))


# ---------------------------------------------------------------------
# assembly

def _fill(a: set[int], b: set[int], pool: list[int]) -> list[int]:
    """Distribute ``pool`` (independent, no coloured neighbours) to equalise sizes.

    Returns the vertices left uncoloured (at most one from ``pool``).
    """
    added: dict[int, list[int]] = {0: [], 1: []}
    for z in pool:
        side = 0 if len(a) <= len(b) else 1
        (a if side == 0 else b).add(z)
        added[side].append(z)
    dropped = []
    if len(a) != len(b):
        side = 0 if len(a) > len(b) else 1
        if not added[side]:
            raise InternalInvariantError("cannot rebalance sides without uncolouring an old vertex")
        z = added[side].pop()
        (a if side == 0 else b).remove(z)
        dropped.append(z)
    return dropped


def _degree_step_exchange(f: Graph, a: set[int], b: set[int], z: int) -> tuple[int, int] | None:
    """``x`` in ``a`` and ``y`` in ``b`` where ``y`` has one more coloured
    neighbour than ``x`` once ``z`` is uncoloured.

    Exchanging their colours raises ``e(a) - e(b)`` by exactly one. If ``x``
    and ``y`` are adjacent, their shared edge is counted on both sides of the
    difference and cancels, so adjacency does not matter.
    """
    colored = (a | b) - {z}

    def deg(v: int) -> int:
        return sum(1 for q in f.neighbors(v) if q in colored)

    by_degree: dict[int, list[int]] = {}
    for y in sorted(b):
        by_degree.setdefault(deg(y), []).append(y)
    for x in sorted(a - {z}):
        for y in by_degree.get(deg(x) + 1, ()):
            return x, y
    return None


def forest_twins(f: Graph, check: bool = True) -> tuple[TwinPair, AssemblyTrace]:
    """Twins in the forest ``f`` of size at least ``ceil(n/2) - 1``."""
    if not f.is_forest():
        raise PreconditionError("forest_twins needs an acyclic graph")
    trace = AssemblyTrace()
    iso_edges = [(u, v) for u, v in f.edges if f.degree(u) == 1 and f.degree(v) == 1]
    trace.isolated_edges = iso_edges
    set_aside = {x for e in iso_edges for x in e}
    rest = f.without(set_aside)

    good = good_twins(rest, check=check)
    trace.good_twins_trace = good.trace
    a, b = set(good.a), set(good.b)
    colored = a | b

    def colored_degree(x: int) -> int:
        return sum(1 for y in rest.neighbors(x) if y in colored)

    s1 = tuple(x for x in range(f.n) if x not in colored and x not in set_aside and rest.degree(x) == 0)
    s2: tuple[int, ...] = ()
    s3: tuple[int, ...] = ()
    for x in good.exceptional:
        pending = good.uncolored_neighbors(x)
        if colored_degree(x) <= 1:
            trace.v, s2 = x, pending
        else:
            trace.w, s3 = x, pending
    trace.s1, trace.s2, trace.s3 = s1, s2, s3
    uncolored = {x for x in range(f.n) if x not in colored and x not in set_aside}
    if set(s1) | set(s2) | set(s3) != uncolored or len(s1) + len(s2) + len(s3) != len(uncolored):
        raise InternalInvariantError("uncoloured vertices are not split into S1, S2, S3")
    if s3 and len(s3) <= len(s2):
        raise InternalInvariantError("|S3| must exceed |S2| when S3 is non-empty")

    dropped: list[int] = []
    if not s2 and not s3:
        trace.case_taken = "1"
        dropped += _fill(a, b, list(s1))
    elif not s2 or not s3:
        z = trace.v if s2 else trace.w
        pending = s2 or s3
        red_nbrs = [y for y in rest.neighbors(z) if y in a]
        if len(red_nbrs) > 1:
            raise InternalInvariantError(f"exceptional vertex {z} has {len(red_nbrs)} red neighbours")
        flip = None
        if red_nbrs:
            # a blue vertex with exactly one coloured neighbour besides z;
            # moving it to red restores e(A) = e(B) once z is uncoloured
            flip = next((y for y in sorted(b)
                         if sum(1 for q in rest.neighbors(y) if q in colored and q != z) == 1), None)
        exchange = None
        if red_nbrs and flip is None:
            exchange = _degree_step_exchange(rest, a, b, z)
        second = None
        if red_nbrs and flip is None and exchange is None and (len(pending) + len(s1)) % 2 == 0:
            # uncolour a blue vertex with a single blue neighbour as well; the
            # even pool then splits exactly, so only z and it are lost
            second = next((y for y in sorted(b)
                           if sum(1 for q in rest.neighbors(y) if q in b) == 1), None)
        if red_nbrs and flip is None and exchange is None and second is None:
            # leave z's pendant vertices uncoloured instead of z itself
            if len(pending) + len(s1) % 2 > 2:
                raise InternalInvariantError(f"no repair for {len(pending)} pendant vertices at {z}")
            trace.case_taken = "2-keep"
            dropped += list(pending)
            dropped += _fill(a, b, list(s1))
        else:
            a.remove(z)
            dropped.append(z)
            if flip is not None:
                trace.case_taken = "2-recolor"
                b.remove(flip)
                a.add(flip)
            elif exchange is not None:
                trace.case_taken = "2-exchange"
                x, y = exchange
                a.remove(x)
                b.add(x)
                b.remove(y)
                a.add(y)
            elif second is not None:
                trace.case_taken = "2-drop"
                b.remove(second)
                dropped.append(second)
            else:
                trace.case_taken = "2"
            dropped += _fill(a, b, list(pending) + list(s1))
    else:
        w = trace.w
        trace.case_taken = "3"
        s2_left, s3_left = list(s2), list(s3)
        if any(y in a for y in rest.neighbors(w)):
            a.add(s2_left.pop(0))
        else:
            a.add(s3_left.pop(0))
        a.remove(w)
        dropped.append(w)
        b.update(s2_left)
        a.update(s3_left[:len(s2_left)])
        s3_left = s3_left[len(s2_left):]
        dropped += _fill(a, b, s3_left + list(s1))
    trace.dropped = tuple(sorted(dropped))

    for p, q in iso_edges:
        a.add(p)
        b.add(q)

    pair = TwinPair.of(f, a, b)
    if not pair.is_twins:
        raise InternalInvariantError(f"assembly case {trace.case_taken} produced e(A)={pair.edges_a} != e(B)={pair.edges_b}")
    if len(trace.dropped) > 2 or 2 * pair.size + len(trace.dropped) != f.n:
        raise InternalInvariantError("assembly left more than two vertices uncoloured")
    return pair, trace


def forest_bound(n: int) -> int:
    """``ceil(n/2) - 1`` (0 for the empty forest)."""
    return max(0, (n + 1) // 2 - 1)
