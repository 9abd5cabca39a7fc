"""How often does G(n, 1/2) have perfect twins?"""

from graphtwins.cli import bench_gnp

for n in (8, 12, 16, 20):
    rep = bench_gnp(n, 0.5, samples=100, seed=1)
    print(f"n={n}: perfect fraction {rep.perfect_twin_fraction:.2f}, histogram {rep.size_histogram}")

# The same seed always gives the same report, whatever the worker count.
assert bench_gnp(12, 0.5, 40, 7, workers=2).to_dict() == bench_gnp(12, 0.5, 40, 7).to_dict()
