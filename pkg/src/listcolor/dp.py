"""Exact list-coloring by dynamic programming over all vertex subsets.

Round ``j`` records, for every subset ``W``, whether ``G[W]`` can be colored
from the lists cut down to colors ``1..j``.  Round 1 is read off the maximal
independent sets of ``G``; round ``j`` extends round ``j-1`` by trying each
maximal independent set ``I`` of ``G[W]`` as the color-``j`` class (restricted
to vertices that allow ``j``).  Tables are indexed by subset bit mask and
subsets are scanned by descending cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from listcolor import _kernels
from listcolor.bounds import FitReport, fit_constant
from listcolor.graph import Instance, members, validate_coloring
from listcolor.mis import enumerate_mis


class SolverInconsistency(AssertionError):
    """A table claims colorability but no witness exists; indicates a solver bug."""


@dataclass(frozen=True)
class RestrictedLists:
    level: int
    lists: tuple[frozenset[int], ...]


@dataclass(frozen=True, eq=False)
class ColorabilityTable:
    """Bit-packed colorability flags for one round; the empty subset reads as 1."""

    n: int
    round: int
    bits: np.ndarray
    scans: int = 0

    @classmethod
    def from_array(cls, n: int, round: int, flags: np.ndarray, scans: int = 0) -> ColorabilityTable:
        bits = np.packbits(flags.astype(bool), bitorder="little")
        bits.flags.writeable = False
        return cls(n, round, bits, scans)

    def entry(self, w: int) -> bool:
        if w == 0:
            return True
        return bool(self.bits[w >> 3] >> (w & 7) & 1)

    def as_array(self) -> np.ndarray:
        """Unpacked uint8 flags of length ``2**n`` with entry 0 set."""
        flags = np.unpackbits(self.bits, count=1 << self.n, bitorder="little")
        flags[0] = 1
        return flags


@dataclass
class SolveStats:
    n: int
    reduced_n: int = 0
    kappa_reduced: int = 0
    per_round: list[int] = field(default_factory=list)
    fit: FitReport | None = None

    @property
    def total(self) -> int:
        return sum(self.per_round)

    @property
    def t(self) -> float | None:
        return self.fit.t if self.fit else None

    @property
    def predicted_work(self) -> float | None:
        return self.fit.predicted_work if self.fit else None


@dataclass(frozen=True)
class SolveResult:
    sat: bool
    coloring: dict[int, int] | None
    stats: SolveStats
    tables: tuple[ColorabilityTable, ...] = ()

    @property
    def status(self) -> str:
        return "SAT" if self.sat else "UNSAT"


@dataclass(frozen=True)
class Preprocessed:
    reduced: Instance
    set_aside: tuple[int, ...]  # original vertex ids, in removal order
    kept: tuple[int, ...]  # original id of each reduced vertex


def restrict_lists(inst: Instance, j: int) -> RestrictedLists:
    if not 1 <= j <= inst.kappa:
        raise ValueError(f"level {j} outside [1, {inst.kappa}]")
    return RestrictedLists(j, tuple(frozenset(c for c in colors if c <= j) for colors in inst.lists))


def _sub_instance(inst: Instance, keep: list[int]) -> Instance:
    return Instance(inst.graph.induced(keep), inst.kappa, tuple(inst.lists[v] for v in keep))


def preprocess_long_lists(inst: Instance, rule: str = "paper") -> Preprocessed:
    """Set aside vertices that can always be colored greedily afterwards.

    ``paper``: every vertex whose list has at least ``n`` colors, in ascending
    order.  ``degree``: repeatedly remove the lowest vertex whose list is longer
    than its degree in what remains; color them back in reverse order.
    """
    g = inst.graph
    if rule == "paper":
        aside = [v for v in range(inst.n) if len(inst.lists[v]) >= inst.n]
    elif rule == "degree":
        aside = []
        alive = g.all_vertices
        changed = True
        while changed:
            changed = False
            for v in members(alive):
                if len(inst.lists[v]) > (g.adjacency[v] & alive).bit_count():
                    aside.append(v)
                    alive &= ~(1 << v)
                    changed = True
                    break
    else:
        raise ValueError(f"unknown long-list rule {rule!r}")
    removed = set(aside)
    kept = [v for v in range(inst.n) if v not in removed]
    return Preprocessed(_sub_instance(inst, kept), tuple(aside), tuple(kept))


def _color_mask(inst: Instance, j: int) -> int:
    return sum(1 << v for v, colors in enumerate(inst.lists) if j in colors)


def _check_pipeline_input(inst: Instance) -> None:
    if inst.n > 62:
        raise ValueError("subset tables support at most 62 vertices")


def round1_init(inst: Instance) -> ColorabilityTable:
    """Round-1 table: exactly the independent sets whose vertices all allow color 1."""
    _check_pipeline_input(inst)
    n = inst.n
    flags = np.zeros(1 << n, dtype=np.uint8)
    comp = _kernels.complement_masks(inst.graph.adjacency)
    _, scans = _kernels.bk_scan(comp, np.int64(inst.graph.all_vertices), flags, np.int64(_color_mask(inst, 1)), _kernels.MARK)
    close_downward(flags, n)
    flags[0] = 1
    return ColorabilityTable.from_array(n, 1, flags, int(scans))


def close_downward(flags: np.ndarray, n: int) -> None:
    """In place: set every subset of a set whose flag is 1.

    One vectorized pass per vertex; equivalent to sweeping subsets by
    descending cardinality and clearing one member at a time.
    """
    for i in range(n):
        view = flags.reshape(-1, 2, 1 << i)
        view[:, 0, :] |= view[:, 1, :]


def round_update(inst: Instance, j: int, prev: ColorabilityTable) -> ColorabilityTable:
    if not 2 <= j <= inst.kappa:
        raise ValueError(f"round {j} outside [2, {inst.kappa}]")
    if prev.round != j - 1 or prev.n != inst.n:
        raise ValueError("previous table does not belong to round j-1 of this instance")
    prev_flags = prev.as_array()
    new_flags = prev_flags.copy()
    comp = _kernels.complement_masks(inst.graph.adjacency)
    scans = _kernels.round_scan(comp, inst.n, prev_flags, new_flags, np.int64(_color_mask(inst, j)))
    return ColorabilityTable.from_array(inst.n, j, new_flags, int(scans))


def reconstruct(inst: Instance, tables: tuple[ColorabilityTable, ...] | list[ColorabilityTable]) -> dict[int, int]:
    """Peel color classes from the top round down, re-deriving each witness set."""
    g = inst.graph
    w = g.all_vertices
    kappa = len(tables)
    if w and (kappa == 0 or not tables[-1].entry(w)):
        raise SolverInconsistency("reconstruct called on an uncolorable instance")
    f: dict[int, int] = {}
    for j in range(kappa, 0, -1):
        if not w:
            break
        lower = tables[j - 2] if j > 1 else None
        if lower is not None and lower.entry(w):
            continue
        mj = _color_mask(inst, j)
        for mis in enumerate_mis(g, w):
            ij = mis & mj
            if ij and (ij == w or (lower is not None and lower.entry(w & ~ij))):
                break
        else:
            raise SolverInconsistency(f"no color-{j} class found for subset {w:#x}")
        for v in members(ij):
            f[v] = j
        w &= ~ij
    if w:
        raise SolverInconsistency(f"vertices {list(members(w))} left uncolored")
    return f


def _greedy_finish(inst: Instance, f: dict[int, int], order: tuple[int, ...]) -> None:
    for v in reversed(order):
        used = {f[u] for u in members(inst.graph.adjacency[v]) if u in f}
        free = sorted(inst.lists[v] - used)
        if not free:
            raise SolverInconsistency(f"set-aside vertex {v} has no free color")
        f[v] = free[0]


def _compact_palette(inst: Instance) -> tuple[Instance, list[int]]:
    palette = sorted(set().union(*inst.lists)) if inst.lists else []
    relabel = {c: i for i, c in enumerate(palette, start=1)}
    lists = tuple(frozenset(relabel[c] for c in colors) for colors in inst.lists)
    return Instance(inst.graph, len(palette), lists), palette


def solve(inst: Instance, rule: str = "paper") -> SolveResult:
    """Decide list-colorability of ``inst`` and return a coloring when one exists."""
    stats = SolveStats(n=inst.n)
    pre = preprocess_long_lists(inst, rule)
    reduced = pre.reduced
    stats.reduced_n = reduced.n
    stats.fit = fit_constant(reduced.graph)
    if any(not colors for colors in reduced.lists):
        return SolveResult(False, None, stats)

    compact, palette = _compact_palette(reduced)
    stats.kappa_reduced = compact.kappa
    tables: list[ColorabilityTable] = []
    if compact.n:
        _check_pipeline_input(compact)
        tables.append(round1_init(compact))
        for j in range(2, compact.kappa + 1):
            tables.append(round_update(compact, j, tables[-1]))
        stats.per_round = [t.scans for t in tables]
        if not tables[-1].entry(compact.graph.all_vertices):
            return SolveResult(False, None, stats, tuple(tables))

    local = reconstruct(compact, tables)
    f = {pre.kept[v]: palette[c - 1] for v, c in local.items()}
    _greedy_finish(inst, f, pre.set_aside)
    f = dict(sorted(f.items()))
    if not validate_coloring(inst, f).ok:
        raise SolverInconsistency("produced coloring fails validation")
    return SolveResult(True, f, stats, tuple(tables))

