"""Seeded generators for the graph families the algorithms are tested on.

All randomness comes from :class:`SplitMix64` so a ``(family, args, seed)``
triple names the same graph in any implementation that follows the same
stream discipline:

* ``random()`` is ``next_u64() >> 11`` scaled by ``2**-53``;
* ``below(k)`` rejects draws at or above the largest multiple of ``k`` below
  ``2**64`` and returns ``draw % k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConstructionError
from .graph import Graph

MASK64 = (1 << 64) - 1

FOREST_NEW_COMPONENT_P = 0.2
CRITERION_RETRY_CAP = 1000
ODD_CLIQUE_VERTEX_CAP = 100_000


class SplitMix64:
    """The splitmix64 generator (Steele, Lea, Flood 2014)."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def permutation(self, n: int) -> list[int]:
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        return perm


def derive_seed(seed: int, index: int) -> int:
    """Independent sub-seed for stream ``index`` of a master ``seed``."""
    return SplitMix64((seed ^ (index * 0xD1B54A32D192ED03)) & MASK64).next_u64()


# -- deterministic families -------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Vertex ``v`` becomes ``perm[v]``."""
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def gen_star(n: int) -> Graph:
    if n < 1:
        raise ValueError("a star needs at least one vertex")
    return Graph(n, ((0, i) for i in range(1, n)))


def odd_clique_orders(m: int) -> list[int]:
    """``a_1 = 1`` and ``a_j`` the least odd integer above ``2 * sum(a_i**2, i < j)``."""
    if m < 1:
        raise ValueError("need at least one clique")
    orders = [1]
    while len(orders) < m:
        bound = 2 * sum(a * a for a in orders)
        nxt = bound + 1
        if nxt % 2 == 0:
            nxt += 1
        orders.append(nxt)
    return orders


def gen_odd_cliques(m: int, cap: int = ODD_CLIQUE_VERTEX_CAP) -> Graph:
    orders = odd_clique_orders(m)
    if sum(orders) > cap:
        raise ValueError(f"odd-clique family with m={m} has {sum(orders)} vertices, above cap {cap}")
    return disjoint_union(*(complete_graph(a) for a in orders))


# -- random families --------------------------------------------------

def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; pairs are visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def gen_forest(n: int, seed: int) -> Graph:
    """Random recursive forest: vertex ``i`` starts a new tree with probability 0.2,
    otherwise it hangs off a uniform earlier vertex."""
    rng = SplitMix64(seed)
    edges = []
    for i in range(1, n):
        if rng.random() < FOREST_NEW_COMPONENT_P:
            continue
        edges.append((rng.below(i), i))
    return Graph(n, edges)


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n <= 1:
        return Graph(max(n, 0))
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = SplitMix64(seed)
    code = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph(n, edges)


def _half_graph(n: int) -> Graph:
    # i ~ j iff i + j >= n: degrees 0..n-2 with a single repeated value
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n) if i + j >= n))


def _criterion_candidate(criterion: int, n: int, seed: int) -> Graph:
    rng = SplitMix64(seed)
    if criterion in (1, 4):
        g = gen_tree(n, derive_seed(seed, criterion))
    elif criterion == 2:
        half = gen_gnp(n // 2, 0.5, rng.next_u64())
        g = disjoint_union(half, half)
    elif criterion == 3:
        base = _half_graph(n)
        edges = set(base.edges)
        for _ in range(rng.below(4)):
            u, v = rng.below(n), rng.below(n)
            if u == v:
                continue
            edges ^= {(min(u, v), max(u, v))}
        g = Graph(n, edges)
    else:
        raise ValueError(f"criterion must be 1..4, got {criterion}")
    return relabel(g, rng.permutation(n))


def gen_criterion_graph(criterion: int, n: int, seed: int) -> Graph:
    """A graph on ``n`` vertices satisfying the given perfect-twin criterion.

    Candidates are drawn from a criterion-specific family (random trees for
    1 and 4, doubled ``G(n/2, 1/2)`` for 2, a perturbed half graph for 3) with
    seeds ``seed, seed+1, ...`` until the detector accepts one.
    """
    from .criteria import criterion_holds

    if criterion not in (1, 2, 3, 4):
        raise ValueError(f"criterion must be 1..4, got {criterion}")
    if n % 2:
        raise ValueError("criterion graphs need an even number of vertices")
    if criterion == 3 and n < 90:
        raise ValueError("criterion 3 needs n >= 90")
    for attempt in range(CRITERION_RETRY_CAP):
        g = _criterion_candidate(criterion, n, (seed + attempt) & MASK64)
        if criterion_holds(g, criterion):
            return g
    raise ConstructionError(
        f"no graph satisfying criterion {criterion} on {n} vertices within {CRITERION_RETRY_CAP} attempts"
    )


class Family(str, Enum):
    GNP = "gnp"
    STAR = "star"
    FOREST = "forest"
    TREE = "tree"
    ODD_CLIQUES = "odd_cliques"
    CRITERION = "criterion"


@dataclass(frozen=True)
class GenSpec:
    family: Family
    n: int = 0
    p: float = 0.5
    m: int = 1
    criterion: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.criterion not in (1, 2, 3, 4):
            raise ValueError("criterion must be 1..4")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def build(self) -> Graph:
        fam = Family(self.family)
        if fam is Family.GNP:
            return gen_gnp(self.n, self.p, self.seed)
        if fam is Family.STAR:
            return gen_star(self.n)
        if fam is Family.FOREST:
            return gen_forest(self.n, self.seed)
        if fam is Family.TREE:
            return gen_tree(self.n, self.seed)
        if fam is Family.ODD_CLIQUES:
            return gen_odd_cliques(self.m)
        return gen_criterion_graph(self.criterion, self.n, self.seed)

    def to_dict(self) -> dict:
        return {
            "family": Family(self.family).value,
            "n": self.n,
            "p": self.p,
            "m": self.m,
            "criterion": self.criterion,
            "seed": self.seed,
        }
