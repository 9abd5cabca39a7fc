"""Degree-sequence conditions that guarantee perfect twins."""

from graphtwins import detect_criteria, gen_criterion_graph, gen_gnp, perfect_twins

for criterion, n in ((1, 12), (2, 12), (3, 90), (4, 14)):
    g = gen_criterion_graph(criterion, n, seed=1)
    found = perfect_twins(g)
    print(f"criterion {criterion}: n={g.n} e={g.m} satisfied={sorted(detect_criteria(g).satisfied)}"
          f" -> {found.method}, sizes {found.pair.size}, disc {found.pair.disc}")

# A dense random graph usually meets none of the conditions, yet swap-based
# search still finds perfect twins; the result is labelled opportunistic.
g = gen_gnp(20, 0.5, seed=8)
found = perfect_twins(g)
print("G(20, 1/2):", sorted(detect_criteria(g).satisfied), found.method if found else None)
