"""A first look at twins: build graphs, check pairs, ask the oracle."""

from graphtwins import Graph, check_twins, exact_t, format_graph, gen_star, parse_graph

# A path on four vertices, written in the edge-list format the CLI reads.
text = """4 3
0 1
1 2
2 3
"""
p4 = parse_graph(text)
print(p4)

# {0, 1} and {2, 3} each induce one edge, so they are twins of size 2.
print(check_twins(p4, [0, 1], [2, 3]))

# {0} against {1, 2} is wrong on two counts: the sizes differ and so do
# the edge counts. The checker lists every violation it finds.
print(check_twins(p4, [0], [1, 2]).violations)

# The oracle searches exhaustively for the largest twins.
res = exact_t(p4)
print("t(P4) =", res.t, "witness", res.witness)

# A star has no perfect twins: any half containing the centre has edges,
# the other half has none.
star = gen_star(6)
print("t(star on 6) =", exact_t(star).t)

# Round trip back to text.
print(format_graph(Graph(3, [(0, 2)]), comment="a single edge"))
