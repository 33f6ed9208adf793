import networkx as nx
import pytest

from conftest import complete, cycle, disjoint_triangles, perfect_matching, random_graph
from listcolor.graph import Graph, is_triangle_free
from listcolor.mis import count_mis, count_mis_all_subsets, enumerate_mis
from listcolor.oracle import brute_force_mis


def from_nx(h):
    return Graph.from_edges(h.number_of_nodes(), list(h.edges()))


def test_clique_gives_singletons():
    assert sorted(enumerate_mis(complete(3), 0b111)) == [0b001, 0b010, 0b100]


def test_four_cycle_gives_diagonals():
    assert sorted(enumerate_mis(cycle(4), 0b1111)) == [0b0101, 0b1010]


def test_two_triangles():
    g = disjoint_triangles(2)
    sets = list(enumerate_mis(g, g.all_vertices))
    # 9 from exhaustive search over all 64 subsets
    assert len(sets) == len(set(sets)) == 9
    assert all(s & 0b000111 and s & 0b111000 for s in sets)
    assert count_mis(g, g.all_vertices) == 9


def test_counts():
    assert count_mis(cycle(5), 0b11111) == 5
    assert count_mis(Graph(4, (0, 0, 0, 0)), 0b1111) == 1
    assert list(enumerate_mis(Graph(4, (0, 0, 0, 0)), 0b1111)) == [0b1111]


def test_empty_subset():
    g = cycle(5)
    assert list(enumerate_mis(g, 0)) == [0]
    assert count_mis(g, 0) == 1


def test_subset_outside_graph_rejected():
    with pytest.raises(ValueError):
        list(enumerate_mis(cycle(3), 0b1000))


def test_deterministic_order():
    g = random_graph(__import__("random").Random(3), 10, 0.4)
    assert list(enumerate_mis(g, g.all_vertices)) == list(enumerate_mis(g, g.all_vertices))


@pytest.mark.parametrize("h", [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6])
def test_matches_oracle_on_small_graphs_every_subset(h):
    g = from_nx(h)
    counts = count_mis_all_subsets(g)
    for w in range(1 << g.n):
        sets = list(enumerate_mis(g, w))
        assert len(sets) == len(set(sets))
        assert set(sets) == brute_force_mis(g, w)
        assert counts[w] == len(sets)


def test_matches_oracle_on_random_graphs(rng):
    for _ in range(60):
        n = rng.randint(7, 10)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        for w in [g.all_vertices] + [rng.getrandbits(n) for _ in range(4)]:
            assert set(enumerate_mis(g, w)) == brute_force_mis(g, w)
            assert count_mis(g, w) == len(brute_force_mis(g, w))


def test_moon_moser_and_triangle_free_bounds(rng):
    for _ in range(200):
        n = rng.randint(1, 14)
        g = random_graph(rng, n, rng.uniform(0.05, 0.9))
        c = count_mis(g, g.all_vertices)
        assert c**3 <= 3**n
        if is_triangle_free(g):
            assert c**2 <= 2**n


@pytest.mark.parametrize("k", range(1, 6))
def test_extremal_graphs(k):
    assert count_mis(disjoint_triangles(k), (1 << 3 * k) - 1) == 3**k
    assert count_mis(perfect_matching(k), (1 << 2 * k) - 1) == 2**k
