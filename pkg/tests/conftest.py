import random

import pytest

from graphtwins.generators import gen_forest
from graphtwins.graph import Graph

from reference import free_trees


@pytest.fixture(scope="session")
def tree_corpus():
    """Every free tree with at most 10 vertices."""
    return [t for n in range(1, 11) for t in free_trees(n)]


@pytest.fixture(scope="session")
def forest_corpus(tree_corpus):
    rng = random.Random(2024)
    out = list(tree_corpus)
    for s in range(500):
        out.append(gen_forest(rng.randint(1, 16), s))
    return out


def p4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


def star(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
