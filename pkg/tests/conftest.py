import random

import pytest

from listcolor.graph import Graph, Instance


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_triangles(k):
    return Graph.from_edges(3 * k, [(3 * i + a, 3 * i + b) for i in range(k) for a, b in ((0, 1), (1, 2), (0, 2))])


def perfect_matching(k):
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_lists(rng, n, kappa, keep=0.6):
    return tuple(frozenset(c for c in range(1, kappa + 1) if rng.random() < keep) for _ in range(n))


def random_instance(rng, n, kappa, p=None, keep=None):
    p = rng.uniform(0.2, 0.8) if p is None else p
    keep = rng.uniform(0.3, 0.9) if keep is None else keep
    return Instance(random_graph(rng, n, p), kappa, random_lists(rng, n, kappa, keep))


@pytest.fixture
def rng():
    return random.Random(20261019)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
