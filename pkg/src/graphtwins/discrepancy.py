"""Low-discrepancy equal-size vertex pairs.

Two constructions are provided:

* :func:`almost_twins_extraction` peels off blocks ``(A_i, B_i)`` of equal
  degree sum, then merges them with alternating orientation
  (:func:`combine_blocks`). Size at least ``(n - 2 lg n) / 2``, discrepancy
  at most ``2 ceil(lg n)^2``.
* :func:`almost_twins_local_search` splits (almost) all vertices in half and
  hill-climbs on single swaps. Discrepancy at most ``(Delta - delta + 1) / 2``.

Both rely on the identity ``2 e(A) + e(A, B) = d(A)`` for a partition of the
host graph's non-isolated vertices into ``A`` and ``B``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Sequence

from .errors import InternalInvariantError
from .graph import Graph, TwinPair, degree_sum, induced_edge_count


class Branch(str, Enum):
    EXTRACTION = "extraction"
    LOCAL_SEARCH = "local_search"


@dataclass(frozen=True)
class BlockPair:
    """A block of the extraction: equal-size sides and their degree gap in ``host``."""

    a_i: tuple[int, ...]
    b_i: tuple[int, ...]
    eps_i: int

    @classmethod
    def of(cls, host: Graph, a: Sequence[int], b: Sequence[int]) -> BlockPair:
        return cls(tuple(sorted(a)), tuple(sorted(b)), abs(degree_sum(host, a) - degree_sum(host, b)))

    def to_dict(self) -> dict:
        return {"a": list(self.a_i), "b": list(self.b_i), "eps": self.eps_i}


@dataclass
class AlmostTwinsTrace:
    branch: Branch
    k: int = 0
    blocks: list[BlockPair] = field(default_factory=list)
    leftover: tuple[int, ...] = ()
    bound: float = 0.0
    achieved_disc: int = 0
    deleted_vertex: int | None = None
    swaps: int = 0

    def to_dict(self) -> dict:
        out = {
            "branch": self.branch.value,
            "bound": self.bound,
            "achieved_disc": self.achieved_disc,
        }
        if self.branch is Branch.EXTRACTION:
            out.update(k=self.k, blocks=[b.to_dict() for b in self.blocks], leftover=list(self.leftover))
        else:
            out.update(deleted_vertex=self.deleted_vertex, swaps=self.swaps)
        return out


def block_size_bound(n: int) -> int:
    """``k = ceil(lg n)``, at least 1."""
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def extraction_bound(n: int) -> int:
    return 2 * block_size_bound(n) ** 2


def local_search_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    return (max(g.degrees) - min(g.degrees) + 1) // 2


def equal_sum_pair(x: Sequence[int], k: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Disjoint index sets of equal size ``<= k`` with equal value sums, or ``None``.

    Enumerates the ``k``-subsets of the first ``min(len(x), 2k)`` indices in
    lexicographic order and stops at the first repeated sum; indices shared
    by the colliding subsets are then removed from both.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    pool = range(min(len(x), 2 * k))
    seen: dict[int, tuple[int, ...]] = {}
    for combo in combinations(pool, k):
        s = sum(x[i] for i in combo)
        prev = seen.get(s)
        if prev is None:
            seen[s] = combo
            continue
        shared = set(prev) & set(combo)
        i_set = tuple(i for i in prev if i not in shared)
        j_set = tuple(i for i in combo if i not in shared)
        return i_set, j_set
    return None


def combine_blocks(host: Graph, blocks: Sequence[BlockPair]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Merge blocks into one pair with ``disc <= max eps_i``.

    Blocks are ranked by degree gap in ``host`` (largest first, ties by list
    position); odd ranks put their heavier side into ``a``, even ranks into
    ``b``, so the degree-gap contributions alternate in sign. The blocks must
    cover every vertex of ``host`` that has an edge.
    """
    covered: set[int] = set()
    for blk in blocks:
        if len(blk.a_i) != len(blk.b_i):
            raise ValueError("block sides differ in size")
        members = set(blk.a_i) | set(blk.b_i)
        if len(members) != 2 * len(blk.a_i) or members & covered:
            raise ValueError("blocks overlap")
        covered |= members
    for u, v in host.edges:
        if (u in covered) != (v in covered):
            raise ValueError("blocks must cover every non-isolated vertex of the host")

    gaps = [degree_sum(host, blk.a_i) - degree_sum(host, blk.b_i) for blk in blocks]
    order = sorted(range(len(blocks)), key=lambda i: (-abs(gaps[i]), i))
    a: list[int] = []
    b: list[int] = []
    for rank, i in enumerate(order, start=1):
        heavy, light = (blocks[i].a_i, blocks[i].b_i) if gaps[i] >= 0 else (blocks[i].b_i, blocks[i].a_i)
        if rank % 2:
            a.extend(heavy)
            b.extend(light)
        else:
            a.extend(light)
            b.extend(heavy)
    return tuple(sorted(a)), tuple(sorted(b))


def almost_twins_extraction(g: Graph) -> tuple[TwinPair, AlmostTwinsTrace]:
    if g.n < 2:
        raise ValueError("almost_twins_extraction needs at least 2 vertices")
    k = block_size_bound(g.n)
    remaining = list(range(g.n))
    raw_blocks: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    while len(remaining) >= 2 * k:
        found = equal_sum_pair([g.degree(v) for v in remaining], k)
        if found is None:
            if g.n >= 16:
                raise InternalInvariantError(
                    f"no equal-degree-sum pair among {len(remaining)} >= 2k={2 * k} vertices (n={g.n})"
                )
            break
        raw_blocks.append(_take(remaining, found))
    # Past the guarantee, keep peeling while collisions still exist: a smaller
    # leftover only helps the size bound and eps_i <= |A_i||S| is unaffected.
    while len(remaining) >= 2:
        found = equal_sum_pair([g.degree(v) for v in remaining], min(k, len(remaining) // 2))
        if found is None:
            break
        raw_blocks.append(_take(remaining, found))

    leftover = tuple(remaining)
    host = g.without(leftover)
    blocks = [BlockPair.of(host, a, b) for a, b in raw_blocks]
    a, b = combine_blocks(host, blocks)
    pair = TwinPair.of(g, a, b)
    trace = AlmostTwinsTrace(
        branch=Branch.EXTRACTION,
        k=k,
        blocks=blocks,
        leftover=leftover,
        bound=float(extraction_bound(g.n)),
        achieved_disc=pair.disc,
    )
    return pair, trace


def _take(remaining: list[int], found: tuple[tuple[int, ...], tuple[int, ...]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    i_set, j_set = found
    a = tuple(remaining[i] for i in i_set)
    b = tuple(remaining[j] for j in j_set)
    drop = set(i_set) | set(j_set)
    remaining[:] = [v for idx, v in enumerate(remaining) if idx not in drop]
    return a, b


def sorted_alternating(vertices: Sequence[int], degree) -> tuple[list[int], list[int]]:
    """Deal vertices sorted by degree (descending, ties by index) alternately to two sides."""
    order = sorted(vertices, key=lambda v: (-degree(v), v))
    return order[0::2], order[1::2]


def best_swap(a: Sequence[int], b: Sequence[int], gap: int, degree) -> tuple[int, int, int] | None:
    """Swap ``(x, y)`` with ``x`` in ``a`` minimising ``|gap - d(x) + d(y)|``.

    ``gap`` is ``e(a) - e(b)``. Only strict improvements count; ties go to the
    lowest ``x`` and then the lowest ``y``. Returns ``(x, y, new_gap)``.
    """
    best = None
    for x in sorted(a):
        dx = degree(x)
        for y in sorted(b):
            new_gap = gap - dx + degree(y)
            if abs(new_gap) < abs(gap) and (best is None or abs(new_gap) < abs(best[2])):
                best = (x, y, new_gap)
    return best


def local_search_partition(host: Graph, vertices: Sequence[int]) -> tuple[list[int], list[int], int, int]:
    """Hill-climb an even-size vertex list of ``host`` to a swap-local optimum.

    ``vertices`` must contain every non-isolated vertex of ``host``. Returns
    ``(a, b, e(a) - e(b), swap_count)``.
    """
    a, b = sorted_alternating(vertices, host.degree)
    gap = induced_edge_count(host, a) - induced_edge_count(host, b)
    swaps = 0
    while gap:
        step = best_swap(a, b, gap, host.degree)
        if step is None:
            break
        x, y, gap = step
        a[a.index(x)] = y
        b[b.index(y)] = x
        swaps += 1
    return a, b, gap, swaps


def almost_twins_local_search(g: Graph) -> tuple[TwinPair, AlmostTwinsTrace]:
    if g.n < 2:
        raise ValueError("almost_twins_local_search needs at least 2 vertices")
    deleted = 0 if g.n % 2 else None
    host = g if deleted is None else g.without([deleted])
    vertices = [v for v in range(g.n) if v != deleted]
    a, b, gap, swaps = local_search_partition(host, vertices)
    pair = TwinPair.of(g, a, b)
    if pair.edges_a - pair.edges_b != gap:
        raise InternalInvariantError("incremental swap gap disagrees with recount")
    trace = AlmostTwinsTrace(
        branch=Branch.LOCAL_SEARCH,
        bound=float(local_search_bound(g)),
        achieved_disc=pair.disc,
        deleted_vertex=deleted,
        swaps=swaps,
    )
    return pair, trace


def almost_twins(g: Graph) -> tuple[TwinPair, AlmostTwinsTrace, AlmostTwinsTrace]:
    """Run both branches; return the lower-discrepancy pair and both traces.

    Ties go to the larger pair.
    """
    p1, t1 = almost_twins_extraction(g)
    p2, t2 = almost_twins_local_search(g)
    return (p1 if prefer_extraction(p1, p2) else p2), t1, t2


def prefer_extraction(p1: TwinPair, p2: TwinPair) -> bool:
    """Selection rule of :func:`almost_twins`: lower discrepancy, then larger size."""
    return (p1.disc, -p1.size) < (p2.disc, -p2.size)
