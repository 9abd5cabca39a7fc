"""The sparse pipeline and what happens to it at laptop scale."""

from graphtwins import gen_gnp, grid_graph, sparse_twins
from graphtwins.sparse import sparse_parameters

for g in (grid_graph(6, 6), gen_gnp(200, 2 / 200, seed=5), gen_gnp(1000, 0.002, seed=0)):
    f, x, l = sparse_parameters(g.n, g.m)
    pair, trace = sparse_twins(g)
    print(f"n={g.n} e={g.m}: f={f:.3f} x={x:.2f} l={l}")
    print(f"  high={len(trace.high_set)} matching={len(trace.matching)} singles={len(trace.singles)}"
          f" untouched={len(trace.untouched)}")
    print(f"  size={pair.size} disc={pair.disc} fallback={trace.fallback} bound={trace.bound:.1f}")

# The reserve wants l = 2 ceil(lg n)^2 disjoint edges. For n in the hundreds
# that exceeds what a sparse graph can supply, so the greedy runs dry and the
# independent leftover is split in two instead. At n = 1000 the greedy does
# find all l edges, but their neighbourhoods swallow every vertex, so nothing
# is left for extraction and the pair is empty. The guaranteed size is only
# positive once f = sqrt(e) lg n / n drops below 1/20, far beyond these sizes.
