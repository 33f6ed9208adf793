"""Maximal independent sets of induced subgraphs.

Maximal independent sets of ``G[w]`` are the maximal cliques of the complement
of ``G`` restricted to ``w``; both routines run Bron-Kerbosch with Tomita
pivoting on complement bit masks, branching on vertices in ascending order.
"""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from listcolor import _kernels
from listcolor.graph import Graph, members


def _complement(g: Graph) -> list[int]:
    full = g.all_vertices
    return [full & ~g.adjacency[v] & ~(1 << v) for v in range(g.n)]


def _candidates(comp: list[int], p: int, x: int) -> int:
    best, best_u = -1, 0
    for u in members(p | x):
        c = (p & comp[u]).bit_count()
        if c > best:
            best, best_u = c, u
    return p & ~comp[best_u]


def enumerate_mis(g: Graph, w: int) -> Iterator[int]:
    """Yield every inclusion-maximal independent set of ``G[w]`` exactly once.

    The empty subset yields the empty set.  Order is deterministic for a fixed
    graph and matches the compiled scan used by the solver.
    """
    if w >> g.n:
        raise ValueError("subset has vertices outside the graph")
    if w == 0:
        yield 0
        return
    comp = _complement(g)
    # Explicit stack of [R, P, X, remaining candidates].
    stack = [[0, w, 0, _candidates(comp, w, 0)]]
    while stack:
        frame = stack[-1]
        r, p, x, cand = frame
        if not cand:
            stack.pop()
            continue
        vbit = cand & -cand
        v = vbit.bit_length() - 1
        frame[1] = p & ~vbit
        frame[2] = x | vbit
        frame[3] = cand ^ vbit
        r2, p2, x2 = r | vbit, p & comp[v], x & comp[v]
        if not p2:
            if not x2:
                yield r2
            continue
        stack.append([r2, p2, x2, _candidates(comp, p2, x2)])


def count_mis(g: Graph, w: int) -> int:
    """Number of maximal independent sets of ``G[w]``."""
    if w >> g.n:
        raise ValueError("subset has vertices outside the graph")
    comp = _kernels.complement_masks(g.adjacency)
    _, examined = _kernels.bk_scan(comp, np.int64(w), np.zeros(1, dtype=np.uint8), np.int64(0), _kernels.COUNT)
    return int(examined)


def count_mis_all_subsets(g: Graph) -> np.ndarray:
    """Array indexed by subset mask holding the MIS count of each induced subgraph."""
    return _kernels.count_all_subsets(_kernels.complement_masks(g.adjacency), g.n)
