"""Exhaustive ground truth on small graphs and the balanced-halving DP.

Subsets are integer bitmasks. Iterating masks of a fixed popcount in
increasing numeric order is exactly colexicographic order on subsets, which
fixes the witnesses returned here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import OracleCapError
from .graph import Graph, TwinPair

DEFAULT_CAP = 14
HALF_CAP = 16


@dataclass(frozen=True)
class OracleResult:
    t: int
    witness: TwinPair
    nodes_examined: int


def subset_edge_counts(g: Graph) -> list[int]:
    """``counts[mask]`` = number of edges induced by the vertex set ``mask``."""
    adj = g.adjacency_masks
    counts = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        rest = mask ^ low
        counts[mask] = counts[rest] + (adj[low.bit_length() - 1] & rest).bit_count()
    return counts


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``range(n)`` as bitmasks, colex order (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def exact_t(g: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Largest ``k`` admitting twins of size ``k``, by exhaustive search.

    Sizes are tried from ``n // 2`` downwards; within a size, ``A`` runs over
    colex order and ``B`` over the colex-later sets with the same induced edge
    count, disjoint from ``A`` and with ``min(A) < min(B)``.
    """
    if g.n > cap:
        raise OracleCapError(f"exact_t refuses n={g.n} above cap {cap}; exhaustive search is exponential")
    counts = subset_edge_counts(g)
    examined = 0
    for k in range(g.n // 2, 0, -1):
        buckets: dict[int, list[int]] = {}
        layer = list(masks_of_size(g.n, k))
        for mask in layer:
            buckets.setdefault(counts[mask], []).append(mask)
        for a in layer:
            low_a = a & -a
            for b in buckets[counts[a]]:
                examined += 1
                if b & a or (b & -b) < low_a:
                    continue
                return OracleResult(k, TwinPair(mask_to_set(a), mask_to_set(b), counts[a], counts[b]), examined)
    return OracleResult(0, TwinPair((), (), 0, 0), examined)


def min_disc_at_half(g: Graph) -> tuple[int, TwinPair]:
    """Minimum ``|e(A) - e(B)|`` over disjoint ``A, B`` of size ``n // 2``.

    For odd ``n`` every choice of the omitted vertex is tried.
    """
    if g.n > HALF_CAP:
        raise OracleCapError(f"min_disc_at_half refuses n={g.n} above cap {HALF_CAP}")
    n = g.n
    if n < 2:
        return 0, TwinPair((), (), 0, 0)
    counts = subset_edge_counts(g)
    full = (1 << n) - 1
    half = n // 2
    omit_choices = [None] if n % 2 == 0 else list(range(n))
    best: tuple[int, int, int] | None = None
    for omit in omit_choices:
        rest = full if omit is None else full ^ (1 << omit)
        anchor = rest & -rest
        for a in masks_of_size(n, half):
            if a & ~rest or not a & anchor:
                continue
            b = rest ^ a
            disc = abs(counts[a] - counts[b])
            if best is None or disc < best[0]:
                best = (disc, a, b)
                if disc == 0:
                    break
        if best is not None and best[0] == 0:
            break
    assert best is not None
    disc, a, b = best
    return disc, TwinPair(mask_to_set(a), mask_to_set(b), counts[a], counts[b])


def balanced_halving(x: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split indices of ``x`` into parts whose sizes and sums each differ by at most one.

    Subset-sum DP over (part size, part sum) with per-size bitsets. Returns
    index sets ``(x1, x2)`` with ``|x1| = len(x) // 2``; when the sizes are
    equal ``x1`` is the part holding index 0. Returns ``None`` if no such
    partition exists. Values must be non-negative.
    """
    values = [int(v) for v in x]
    if any(v < 0 for v in values):
        raise ValueError("balanced_halving expects non-negative integers")
    m = len(values)
    size = m // 2
    total = sum(values)
    targets = [s for s in sorted({(total - 1) // 2, total // 2, (total + 1) // 2}, key=lambda s: (abs(2 * s - total), s))
               if s >= 0 and abs(2 * s - total) <= 1]

    # layers[i][c]: bitset of sums reachable with c items among the first i
    reach = [0] * (size + 1)
    reach[0] = 1
    layers = [reach[:]]
    for v in values:
        nxt = reach[:]
        for c in range(size, 0, -1):
            nxt[c] |= reach[c - 1] << v
        reach = nxt
        layers.append(reach[:])

    for s in targets:
        if not (reach[size] >> s) & 1:
            continue
        chosen = []
        c, rem = size, s
        for i in range(m, 0, -1):
            if (layers[i - 1][c] >> rem) & 1:
                continue
            chosen.append(i - 1)
            c -= 1
            rem -= values[i - 1]
        assert c == 0 and rem == 0
        x1 = tuple(sorted(chosen))
        x2 = tuple(i for i in range(m) if i not in set(x1))
        if len(x1) == len(x2) and x1 and 0 not in x1:
            x1, x2 = x2, x1
        return x1, x2
    return None
