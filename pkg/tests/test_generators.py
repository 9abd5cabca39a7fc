import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphtwins.criteria import detect_criteria
from graphtwins.errors import ConstructionError
from graphtwins.generators import (
    Family,
    GenSpec,
    SplitMix64,
    derive_seed,
    gen_criterion_graph,
    gen_forest,
    gen_gnp,
    gen_odd_cliques,
    gen_star,
    gen_tree,
    grid_graph,
    odd_clique_orders,
)
from graphtwins.graph import degree_profile

from conftest import complete
from reference import is_forest


def test_splitmix64_reference_vectors():
    # published outputs of the reference splitmix64.c
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_random_and_below_follow_the_stream():
    a, b = SplitMix64(99), SplitMix64(99)
    assert a.random() == (b.next_u64() >> 11) / 2**53
    for k in (1, 2, 3, 7, 1000):
        x = a.below(k)
        assert 0 <= x < k
    with pytest.raises(ValueError):
        a.below(0)


@given(st.integers(0, 2**64 - 1), st.integers(0, 30))
def test_permutation_is_a_permutation(seed, n):
    assert sorted(SplitMix64(seed).permutation(n)) == list(range(n))


def test_derive_seed_distinct():
    subs = {derive_seed(5, i) for i in range(1000)}
    assert len(subs) == 1000


def test_gnp_examples():
    assert gen_gnp(5, 0.0, 11).m == 0
    assert gen_gnp(4, 1.0, 11) == complete(4)
    assert gen_gnp(20, 0.5, 42) == gen_gnp(20, 0.5, 42)
    assert gen_gnp(20, 0.5, 42) != gen_gnp(20, 0.5, 43)
    with pytest.raises(ValueError):
        gen_gnp(4, 1.5, 0)


def test_gnp_density_is_plausible():
    g = gen_gnp(60, 0.3, 1)
    pairs = 60 * 59 // 2
    assert abs(g.m / pairs - 0.3) < 0.05


def test_star_examples():
    assert gen_star(2).edges == ((0, 1),)
    assert sorted(gen_star(6).degrees) == [1, 1, 1, 1, 1, 5]
    assert gen_star(1).m == 0 and gen_star(1).n == 1


def test_odd_cliques_examples():
    assert odd_clique_orders(2) == [1, 3]
    g = gen_odd_cliques(2)
    assert g.n == 4 and g.m == 3
    assert odd_clique_orders(3) == [1, 3, 21]
    assert gen_odd_cliques(3).n == 25
    assert gen_odd_cliques(1).n == 1
    with pytest.raises(ValueError):
        gen_odd_cliques(5)


def test_odd_clique_growth_rule():
    orders = odd_clique_orders(5)
    for j, a in enumerate(orders):
        assert a % 2 == 1
        assert a > 2 * sum(x * x for x in orders[:j])
        # minimality: the next smaller odd number violates the rule
        if j:
            assert a - 2 <= 2 * sum(x * x for x in orders[:j])


@settings(max_examples=50)
@given(st.integers(0, 40), st.integers(0, 2**64 - 1))
def test_forest_is_acyclic_and_deterministic(n, seed):
    g = gen_forest(n, seed)
    assert g.n == n and is_forest(g) and g.is_forest()
    assert g == gen_forest(n, seed)


def test_forest_examples():
    assert gen_forest(1, 5).n == 1 and gen_forest(1, 5).m == 0
    assert gen_forest(10, 7) == gen_forest(10, 7)


@given(st.integers(1, 30), st.integers(0, 2**32))
def test_tree_is_spanning_tree(n, seed):
    g = gen_tree(n, seed)
    assert g.m == n - 1 and g.is_forest()


def test_grid():
    g = grid_graph(3, 4)
    assert g.n == 12 and g.m == 3 * 3 + 2 * 4


@pytest.mark.parametrize("criterion, n", [(1, 4), (1, 10), (2, 6), (2, 12), (4, 4), (4, 12), (3, 90)])
def test_criterion_graph_satisfies_criterion(criterion, n):
    for seed in range(3):
        g = gen_criterion_graph(criterion, n, seed)
        assert g.n == n
        assert criterion in detect_criteria(g).satisfied
        assert g == gen_criterion_graph(criterion, n, seed)


def test_criterion_graph_small_examples():
    # on four vertices the only trees passing criteria 1 and 4 are paths
    assert sorted(gen_criterion_graph(1, 4, 0).degrees) == [1, 1, 2, 2]
    assert sorted(gen_criterion_graph(4, 4, 0).degrees) == [1, 1, 2, 2]
    g = gen_criterion_graph(2, 6, 0)
    assert all(len(c) % 2 == 0 for c in degree_profile(g).classes.values())


def test_criterion_graph_preconditions():
    with pytest.raises(ValueError):
        gen_criterion_graph(1, 5, 0)
    with pytest.raises(ValueError):
        gen_criterion_graph(3, 20, 0)
    with pytest.raises(ValueError):
        gen_criterion_graph(5, 10, 0)


def test_criterion_graph_budget(monkeypatch):
    import graphtwins.criteria as crit

    monkeypatch.setattr(crit, "criterion_holds", lambda g, c: False)
    with pytest.raises(ConstructionError):
        gen_criterion_graph(2, 6, 0)


def test_genspec():
    spec = GenSpec(Family.STAR, n=5)
    assert spec.build() == gen_star(5)
    assert spec.to_dict()["family"] == "star"
    assert GenSpec(Family.GNP, n=6, p=1.0).build() == complete(6)
    assert GenSpec(Family.ODD_CLIQUES, m=2).build().n == 4
    assert GenSpec(Family.FOREST, n=9, seed=3).build() == gen_forest(9, 3)
    assert GenSpec(Family.TREE, n=9, seed=3).build() == gen_tree(9, 3)
    assert GenSpec(Family.CRITERION, n=4, criterion=1).build().m == 3
    for bad in ({"p": -0.1}, {"n": -1}, {"criterion": 0}, {"seed": -1}):
        with pytest.raises(ValueError):
            GenSpec(Family.GNP, **bad)
