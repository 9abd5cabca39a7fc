"""Low-discrepancy pairs in general graphs.

Two constructions compete. Extraction keeps almost every vertex and bounds
the discrepancy by a polylogarithm; local search uses exactly half the
vertices on each side and bounds the discrepancy by the degree spread.
"""

import math

from graphtwins import (
    almost_twins,
    almost_twins_extraction,
    almost_twins_local_search,
    extraction_bound,
    gen_gnp,
    local_search_bound,
    min_disc_at_half,
)

g = gen_gnp(40, 0.3, seed=11)
print(g)

pair, trace = almost_twins_extraction(g)
print("extraction:", pair.size, "per side, disc", pair.disc, "<=", extraction_bound(g.n))
print("  blocks used:", len(trace.blocks))

pair, trace = almost_twins_local_search(g)
print("local search:", pair.size, "per side, disc", pair.disc, "<=", local_search_bound(g))
print("  swaps:", trace.swaps)

# almost_twins runs both and keeps the smaller discrepancy.
best, _, _ = almost_twins(g)
print("best:", best.size, best.disc)

# On a graph small enough for the oracle, local search can be compared with
# the true optimum over all balanced halvings.
small = gen_gnp(12, 0.5, seed=3)
opt, _ = min_disc_at_half(small)
found, _ = almost_twins_local_search(small)
print(f"n=12: local search disc {found.disc}, optimum {opt}, lg n = {math.log2(12):.2f}")
