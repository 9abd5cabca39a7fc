"""Forests always have twins missing at most two vertices."""

from graphtwins import exact_t, forest_bound, forest_twins, gen_forest, gen_star, good_twins, is_good

# The recursion that builds good twins peels leaves, colours what is left and
# re-inserts the leaves case by case. Its trace records every step.
tree = gen_forest(12, seed=4)
coloring = good_twins(tree)
print("red:", coloring.a, "blue:", coloring.b, "uncoloured:", coloring.uncolored)
for frame in coloring.trace:
    print("  u =", frame["u"], "leaves", frame["leaves"], "case", frame["case"])
print("structural violations:", is_good(tree, coloring))

# Assembly turns good twins into twins of size at least ceil(n/2) - 1.
pair, trace = forest_twins(tree)
print("forest twins:", pair.size, ">=", forest_bound(tree.n), "oracle:", exact_t(tree).t, "case", trace.case_taken)

# Stars show the bound cannot be improved.
for n in (6, 8, 10):
    print(f"star {n}: forest_twins {forest_twins(gen_star(n))[0].size}, t = {exact_t(gen_star(n)).t}")
