from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle
from listcolor.graph import (
    Graph,
    IncompleteColoringError,
    Instance,
    InstanceParseError,
    format_instance,
    is_triangle_free,
    members,
    parse_instance,
    validate_coloring,
)


def test_parse_precoloring_path():
    inst = parse_instance("p lc 3 2 2\ne 1 2\ne 2 3\nf 1 1\nf 3 1\n")
    assert inst.graph.edges() == [(0, 1), (1, 2)]
    assert inst.kappa == 2
    assert inst.lists == (frozenset({1}), frozenset({1, 2}), frozenset({1}))


def test_parse_dedups_edges():
    inst = parse_instance("p lc 2 1 3\ne 1 2\ne 1 2\n")
    assert inst.graph.edges() == [(0, 1)]
    assert inst.lists == (frozenset({1, 2, 3}),) * 2


def test_parse_comments_and_explicit_lists():
    inst = parse_instance("c hello\n\np lc 3 1 4\nc mid\ne 3 1\nl 2 4 2\nl 3\n")
    assert inst.graph.edges() == [(0, 2)]
    assert inst.lists == (frozenset({1, 2, 3, 4}), frozenset({2, 4}), frozenset())


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("p lc 1 0 2\nl 1 5\n", 2, "color 5"),
        ("p lc 2 1 2\ne 1 3\n", 2, "vertex 3"),
        ("p lc 2 1 2\ne 2 2\n", 2, "self-loop"),
        ("p lc 2 0 2\nf 1 1\nl 1 2\n", 3, "second list"),
        ("p lc 2 0 2\nf 1 1 2\n", 2, "f <v> <c>"),
        ("e 1 2\n", 1, "header"),
        ("p lc 2 x 2\n", 1, "integers"),
        ("p col 2 0 2\n", 1, "header"),
        ("p lc 2 0 2\np lc 2 0 2\n", 2, "duplicate"),
        ("p lc 2 0 2\nq 1\n", 2, "unknown"),
        ("p lc 27 0 2\n", 1, "exceeds"),
        ("c only comments\n", 0, "missing header"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(InstanceParseError) as info:
        parse_instance(text)
    assert info.value.lineno == line
    assert fragment in str(info.value)


def test_max_n_override():
    text = "p lc 27 0 1\n"
    assert parse_instance(text, max_n=30).n == 27


def test_empty_palette_accepted():
    inst = parse_instance("p lc 2 0 0\n")
    assert inst.lists == (frozenset(), frozenset())


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


@st.composite
def instances(draw):
    n = draw(st.integers(0, 8))
    kappa = draw(st.integers(0, 5))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    lists = tuple(draw(st.frozensets(st.integers(1, kappa))) if kappa else frozenset() for _ in range(n))
    return Instance(Graph.from_edges(n, edges), kappa, lists)


@given(instances())
def test_round_trip(inst):
    again = parse_instance(format_instance(inst))
    assert again == inst


def test_validate_ok_and_violations():
    k3 = Instance.full_lists(complete(3), 3)
    assert validate_coloring(k3, {0: 1, 1: 2, 2: 3}).ok

    edge = Instance.full_lists(complete(2), 2)
    report = validate_coloring(edge, {0: 1, 1: 1})
    assert not report.ok
    assert [(v.kind, v.vertices) for v in report.violations] == [("edge", (0, 1))]

    single = Instance(Graph(1, (0,)), 2, (frozenset({2}),))
    report = validate_coloring(single, {0: 1})
    assert [(v.kind, v.vertices, v.color) for v in report.violations] == [("list", (0,), 1)]


def test_validate_requires_total_coloring():
    with pytest.raises(IncompleteColoringError):
        validate_coloring(Instance.full_lists(complete(2), 2), {0: 1})


@settings(max_examples=60)
@given(instances(), st.data())
def test_valid_coloring_restricts_to_valid_subcolorings(inst, data):
    # Build a valid coloring (when the lists allow a greedy one) and check every induced restriction.
    f = {}
    for v in range(inst.n):
        used = {f[u] for u in members(inst.graph.adjacency[v]) if u in f}
        free = sorted(inst.lists[v] - used)
        if not free:
            return
        f[v] = free[0]
    assert validate_coloring(inst, f).ok
    w = data.draw(st.integers(0, (1 << inst.n) - 1))
    keep = list(members(w))
    sub = Instance(inst.graph.induced(keep), inst.kappa, tuple(inst.lists[v] for v in keep))
    assert validate_coloring(sub, {i: f[v] for i, v in enumerate(keep)}).ok


def test_triangle_free_examples():
    assert not is_triangle_free(complete(3))
    assert is_triangle_free(cycle(5))
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert is_triangle_free(k33)


@given(instances())
def test_triangle_free_matches_triple_scan(inst):
    g = inst.graph
    brute = not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c) for a, b, c in combinations(range(g.n), 3)
    )
    assert is_triangle_free(g) == brute
