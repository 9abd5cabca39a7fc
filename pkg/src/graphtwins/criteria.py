"""Sufficient conditions for perfect twins and the matching constructions.

A half/half partition ``(A, B)`` of all vertices with ``d(A) = d(B)`` always
has ``e(A) = e(B)``, so every constructor below only balances degree sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .discrepancy import local_search_partition, sorted_alternating
from .errors import ConstructionError, InternalInvariantError, PreconditionError
from .graph import DegreeProfile, Graph, TwinPair, degree_profile, degree_sum, induced_edge_count
from .oracle import balanced_halving

ODD_CLASS_MIN_N = 90
# cheapest first
PREFERENCE = (2, 1, 4, 3)


@dataclass(frozen=True)
class CriterionReport:
    satisfied: frozenset[int]
    evidence: dict = field(default_factory=dict)
    reason: str | None = None

    def to_dict(self) -> dict:
        out = {"satisfied": sorted(self.satisfied), "evidence": self.evidence}
        if self.reason:
            out["reason"] = self.reason
        return out


def consecutive_pairs(g: Graph, profile: DegreeProfile | None = None) -> list[tuple[int, int]]:
    """Maximum set of disjoint pairs ``(v, v')`` with ``d(v) + 1 = d(v')``.

    Degree classes form a path, so sweeping degrees upward and matching as
    many leftover vertices of ``V_d`` as possible into ``V_{d+1}`` is optimal.
    Lowest indices are matched first.
    """
    profile = profile or degree_profile(g)
    pairs: list[tuple[int, int]] = []
    carry: list[int] = []
    prev_degree = None
    for d, members in profile.classes.items():
        fresh = list(members)
        if prev_degree is not None and prev_degree + 1 == d:
            take = min(len(carry), len(fresh))
            pairs.extend(zip(carry[:take], fresh[:take]))
            fresh = fresh[take:]
        carry = fresh
        prev_degree = d
    return pairs


def _evaluate(g: Graph) -> tuple[set[int], dict]:
    profile = degree_profile(g)
    classes = profile.classes
    satisfied: set[int] = set()
    evidence: dict = {}
    if not classes:
        return {1, 2, 4}, {"1": {"degrees": []}, "2": {"odd_classes": []}, "4": {"pairs": [], "needed": 0}}

    lo, hi = profile.min_degree, profile.max_degree
    degrees = sorted(classes)
    consecutive = degrees == list(range(lo, hi + 1))
    evidence["1"] = {"min_degree": lo, "max_degree": hi, "missing": sorted(set(range(lo, hi + 1)) - set(degrees))}
    if consecutive:
        satisfied.add(1)

    odd = [d for d in degrees if len(classes[d]) % 2]
    evidence["2"] = {"class_sizes": {str(d): len(classes[d]) for d in degrees}, "odd_classes": odd}
    if not odd:
        satisfied.add(2)

    evidence["3"] = {"n": g.n, "odd_class_count": len(odd), "needed_above": g.n / 2}
    if g.n >= ODD_CLASS_MIN_N and len(odd) > g.n / 2:
        satisfied.add(3)

    pairs = consecutive_pairs(g, profile)
    evidence["4"] = {"pairs": [list(p) for p in pairs], "needed": hi - lo}
    if len(pairs) >= hi - lo:
        satisfied.add(4)
    return satisfied, evidence


def detect_criteria(g: Graph) -> CriterionReport:
    if g.n % 2:
        return CriterionReport(frozenset(), {}, reason="odd vertex count: perfect twins impossible")
    satisfied, evidence = _evaluate(g)
    return CriterionReport(frozenset(satisfied), evidence)


def criterion_holds(g: Graph, criterion: int) -> bool:
    return criterion in detect_criteria(g).satisfied


def _require_even(g: Graph) -> None:
    if g.n % 2:
        raise PreconditionError("perfect twins need an even number of vertices")


def _finish(g: Graph, a, b, label: str) -> TwinPair:
    """A full half/half split with equal degree sums is twins."""
    a, b = sorted(a), sorted(b)
    if len(a) != len(b) or len(a) * 2 != g.n or set(a) & set(b):
        raise InternalInvariantError(f"{label}: not a half/half partition")
    if degree_sum(g, a) != degree_sum(g, b):
        raise InternalInvariantError(f"{label}: degree sums differ ({degree_sum(g, a)} vs {degree_sum(g, b)})")
    pair = TwinPair.of(g, a, b)
    if not pair.is_twins:
        raise InternalInvariantError(f"{label}: equal degree sums but e(A) != e(B)")
    return pair


def perfect_twins_consecutive(g: Graph) -> TwinPair:
    """Swap consecutive-degree vertices across a sorted-alternating split until balanced.

    While ``e(A) != e(B)``, a vertex of degree ``d`` on the lighter side is
    exchanged with a vertex of degree ``d + 1`` on the heavier side, which
    moves ``e(A) - e(B)`` one step towards zero. If no such pair exists the
    degree sequence was not consecutive.
    """
    _require_even(g)
    a, b = sorted_alternating(range(g.n), g.degree)
    gap = induced_edge_count(g, a) - induced_edge_count(g, b)
    while gap:
        light, heavy = (a, b) if gap < 0 else (b, a)
        heavy_by_degree: dict[int, int] = {}
        for v in sorted(heavy, reverse=True):
            heavy_by_degree[g.degree(v)] = v
        swap = next(((x, heavy_by_degree[g.degree(x) + 1]) for x in sorted(light)
                     if g.degree(x) + 1 in heavy_by_degree), None)
        if swap is None:
            raise InternalInvariantError(f"consecutive-degree swap blocked at e(A)-e(B)={gap}")
        x, y = swap
        light[light.index(x)] = y
        heavy[heavy.index(y)] = x
        new_gap = induced_edge_count(g, a) - induced_edge_count(g, b)
        if abs(new_gap - gap) != 1 or abs(new_gap) >= abs(gap):
            raise InternalInvariantError("consecutive swap did not move the gap by exactly one towards zero")
        gap = new_gap
    return _finish(g, a, b, "criterion 1")


def perfect_twins_even_classes(g: Graph) -> TwinPair:
    _require_even(g)
    a: list[int] = []
    b: list[int] = []
    for d, members in degree_profile(g).classes.items():
        if len(members) % 2:
            raise PreconditionError(f"degree class {d} has odd size {len(members)}")
        half = len(members) // 2
        a.extend(members[:half])
        b.extend(members[half:])
    return _finish(g, a, b, "criterion 2")


def perfect_twins_odd_classes(g: Graph) -> TwinPair:
    """Halve every degree class, then split the one-per-odd-class leftovers by degree sum.

    The leftovers have distinct degrees; a balanced halving makes their degree
    sums differ by at most one, and parity of the total degree sum closes the
    gap.
    """
    _require_even(g)
    a: list[int] = []
    b: list[int] = []
    spare: list[int] = []
    for members in degree_profile(g).classes.values():
        half = len(members) // 2
        a.extend(members[:half])
        b.extend(members[half:2 * half])
        spare.extend(members[2 * half:])
    split = balanced_halving([g.degree(v) for v in spare])
    if split is None:
        raise ConstructionError(
            "no balanced halving of leftover degrees " + str(sorted(g.degree(v) for v in spare))
        )
    x1, x2 = split
    a.extend(spare[i] for i in x1)
    b.extend(spare[i] for i in x2)
    return _finish(g, a, b, "criterion 3")


def perfect_twins_consecutive_pairs(g: Graph) -> TwinPair:
    _require_even(g)
    profile = degree_profile(g)
    if not profile.classes:
        return TwinPair((), (), 0, 0)
    x = profile.max_degree - profile.min_degree
    pairs = consecutive_pairs(g, profile)
    if len(pairs) < x:
        raise PreconditionError(f"only {len(pairs)} disjoint consecutive pairs, need {x}")
    pairs = pairs[:x]
    used = {v for p in pairs for v in p}
    a, b = sorted_alternating([v for v in range(g.n) if v not in used], g.degree)
    excess = degree_sum(g, a) - degree_sum(g, b)
    if not 0 <= excess <= x:
        raise InternalInvariantError(f"alternating split left degree excess {excess} outside [0, {x}]")
    # pair i = (low, high): low to A lowers the excess by one
    for low, high in pairs[:excess]:
        a.append(low)
        b.append(high)
    for i, (low, high) in enumerate(pairs[excess:], start=excess + 1):
        if i % 2 == 0:
            a.append(low)
            b.append(high)
        else:
            a.append(high)
            b.append(low)
    return _finish(g, a, b, "criterion 4")


CONSTRUCTORS = {
    1: perfect_twins_consecutive,
    2: perfect_twins_even_classes,
    3: perfect_twins_odd_classes,
    4: perfect_twins_consecutive_pairs,
}


@dataclass(frozen=True)
class PerfectTwinsResult:
    pair: TwinPair
    method: str
    report: CriterionReport


def perfect_twins(g: Graph, opportunistic: bool = True) -> PerfectTwinsResult | None:
    """Perfect twins via the first applicable criterion (order 2, 1, 4, 3).

    With ``opportunistic`` set, a swap local search that happens to reach zero
    discrepancy is accepted too and reported as method ``"opportunistic"``.
    """
    report = detect_criteria(g)
    if g.n % 2:
        return None
    for c in PREFERENCE:
        if c in report.satisfied:
            return PerfectTwinsResult(CONSTRUCTORS[c](g), f"criterion_{c}", report)
    if opportunistic and g.n:
        a, b, gap, _ = local_search_partition(g, range(g.n))
        if gap == 0:
            return PerfectTwinsResult(TwinPair.of(g, a, b), "opportunistic", report)
    return None
