"""Brute-force references for list-colorability and maximal independent sets.

Deliberately naive: plain Python sets built from the edge list, no bit tricks
and nothing shared with the solver.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from listcolor.graph import Graph, Instance


class OracleBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_colorable_n: int = 12
    max_mis_n: int = 16

    def __post_init__(self) -> None:
        if self.max_colorable_n <= 0 or self.max_mis_n <= 0:
            raise ValueError("oracle budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def _vertices(w: int) -> list[int]:
    return [v for v in range(w.bit_length()) if w >> v & 1]


def _neighbor_sets(g: Graph) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def brute_force_colorable(
    inst: Instance,
    w: int | None = None,
    lists: Sequence[frozenset[int]] | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> bool:
    """Backtracking search for a list-coloring of ``G[w]``.

    ``lists`` overrides the instance lists (e.g. a restricted level); ``w``
    defaults to all vertices.
    """
    order = list(range(inst.n)) if w is None else _vertices(w)
    if len(order) > budget.max_colorable_n:
        raise OracleBudgetError(f"{len(order)} vertices exceed the colorability budget {budget.max_colorable_n}")
    lists = inst.lists if lists is None else lists
    nbrs = _neighbor_sets(inst.graph)
    f: dict[int, int] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in sorted(lists[v]):
            if all(f.get(u) != c for u in nbrs[v]):
                f[v] = c
                if extend(i + 1):
                    return True
                del f[v]
        return False

    return extend(0)


def brute_force_mis(g: Graph, w: int, budget: OracleBudget = DEFAULT_BUDGET) -> set[int]:
    """All maximal independent sets of ``G[w]`` by checking every subset."""
    verts = _vertices(w)
    if len(verts) > budget.max_mis_n:
        raise OracleBudgetError(f"{len(verts)} vertices exceed the MIS budget {budget.max_mis_n}")
    nbrs = _neighbor_sets(g)
    found = set()
    for size in range(len(verts) + 1):
        for combo in combinations(verts, size):
            s = set(combo)
            if any(nbrs[v] & s for v in s):
                continue
            if any(not (nbrs[u] & s) for u in verts if u not in s):
                continue
            found.add(sum(1 << v for v in s))
    return found
