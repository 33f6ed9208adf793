"""Compiled inner loops: pivoting Bron-Kerbosch over complement bit masks.

Masks are int64, so graphs are limited to 62 vertices here; tables limit
practical sizes far earlier.
"""

from __future__ import annotations

import numba
import numpy as np

COUNT = 0
MARK = 1
HIT = 2

_STACK = 64


@numba.njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return ((x * 0x0101010101010101) >> 56) & 0xFF


@numba.njit(cache=True, inline="always")
def _lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@numba.njit(cache=True)
def _candidates(comp, p, x):
    # Tomita pivot: the vertex of P | X with most non-neighbors in P; lowest index wins ties.
    best = -1
    best_u = 0
    rest = p | x
    while rest:
        u = _lowbit_index(rest)
        rest &= rest - 1
        c = _popcount(p & comp[u])
        if c > best:
            best = c
            best_u = u
    return p & ~comp[best_u]


@numba.njit(cache=True)
def bk_scan(comp, w, table, mj, mode):
    return _bk(comp, w, table, mj, mode, np.zeros((4, _STACK), dtype=np.int64))


@numba.njit(cache=True)
def _bk(comp, w, table, mj, mode, stack):
    """Enumerate maximal independent sets of G[w] in ascending-vertex order.

    ``comp[v]`` is the non-neighborhood of ``v`` (excluding ``v``).  Returns
    ``(hit, examined)``.  In COUNT mode every set is counted.  In MARK mode
    ``table[I & mj] = 1`` for every set ``I`` with nonempty ``I & mj``.  In HIT
    mode ``table`` is the previous round and the scan stops at the first ``I``
    with ``I & mj`` nonempty and either equal to ``w`` or with
    ``table[w & ~(I & mj)]`` set.
    """
    if w == 0:
        return False, 1
    rs, ps, xs, cs = stack[0], stack[1], stack[2], stack[3]
    rs[0] = 0
    ps[0] = w
    xs[0] = 0
    cs[0] = _candidates(comp, w, 0)
    depth = 0
    examined = 0
    while depth >= 0:
        cand = cs[depth]
        if cand == 0:
            depth -= 1
            continue
        vbit = cand & -cand
        cs[depth] = cand ^ vbit
        v = _lowbit_index(vbit)
        r = rs[depth] | vbit
        p = ps[depth] & comp[v]
        x = xs[depth] & comp[v]
        ps[depth] &= ~vbit
        xs[depth] |= vbit
        if p == 0:
            if x != 0:
                continue
            examined += 1
            if mode == MARK:
                ij = r & mj
                if ij != 0:
                    table[ij] = 1
            elif mode == HIT:
                ij = r & mj
                if ij != 0 and (ij == w or table[w & ~ij] != 0):
                    return True, examined
            continue
        depth += 1
        rs[depth] = r
        ps[depth] = p
        xs[depth] = x
        cs[depth] = _candidates(comp, p, x)
    return False, examined


@numba.njit(cache=True)
def round_scan(comp, n, prev, new, mj):
    """Fill ``new`` (a copy of ``prev``) for one color round; return the (W, I) pair count.

    Subsets are visited by descending cardinality via Gosper's hack.  Entries
    already set in ``prev`` are carried without enumeration.
    """
    stack = np.zeros((4, _STACK), dtype=np.int64)
    total = 0
    top = np.int64(1) << n
    for k in range(n, 0, -1):
        w = (np.int64(1) << k) - 1
        while w < top:
            if prev[w] == 0:
                hit, examined = _bk(comp, w, prev, mj, HIT, stack)
                total += examined
                if hit:
                    new[w] = 1
            c = w & -w
            r = w + c
            w = (((r ^ w) >> 2) // c) | r
    return total


@numba.njit(cache=True)
def count_all_subsets(comp, n):
    """MIS counts of G[M] for every ``M`` in ``0..2^n-1`` (index = mask)."""
    stack = np.zeros((4, _STACK), dtype=np.int64)
    out = np.zeros(np.int64(1) << n, dtype=np.int64)
    for m in range(np.int64(1) << n):
        hit, examined = _bk(comp, m, out, 0, COUNT, stack)
        out[m] = examined
    return out


def complement_masks(adjacency: tuple[int, ...]) -> np.ndarray:
    n = len(adjacency)
    full = (1 << n) - 1
    return np.array([full & ~adj & ~(1 << v) for v, adj in enumerate(adjacency)], dtype=np.int64)
