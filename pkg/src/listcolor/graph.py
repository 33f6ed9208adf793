"""Graphs, list-coloring instances, the instance file format, and coloring checks.

Vertex subsets are plain Python ints used as bit sets: vertex ``v`` is a member
of ``w`` iff ``w >> v & 1``.  Vertices are 0-based internally and 1-based in
instance files.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

DEFAULT_MAX_N = 26

Coloring = Mapping[int, int]


class InstanceParseError(ValueError):
    """Raised for malformed instance text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class IncompleteColoringError(ValueError):
    """The coloring handed to :func:`validate_coloring` misses some vertex."""


def members(w: int) -> Iterator[int]:
    """Yield the vertices of bit set ``w`` in ascending order."""
    while w:
        low = w & -w
        yield low.bit_length() - 1
        w ^= low


def to_mask(vertices: Iterable[int]) -> int:
    w = 0
    for v in vertices:
        w |= 1 << v
    return w


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with bit-set adjacency."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adjacency):
            if nbrs >> self.n:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in members(nbrs):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adjacency[u] >> (u + 1) << (u + 1))]

    def is_independent(self, w: int) -> bool:
        return all(not (self.adjacency[v] & w) for v in members(w))

    def induced(self, keep: list[int]) -> Graph:
        """Subgraph induced by ``keep``, renumbered ``0..len(keep)-1`` in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(to_mask(index[u] for u in members(self.adjacency[v]) if u in index))
        return Graph(len(keep), tuple(adj))


@dataclass(frozen=True)
class Instance:
    """A graph, a palette size ``kappa``, and a color list per vertex (colors are 1-based)."""

    graph: Graph
    kappa: int
    lists: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kappa < 0:
            raise ValueError("kappa must be non-negative")
        if len(self.lists) != self.graph.n:
            raise ValueError("one color list per vertex is required")
        for v, colors in enumerate(self.lists):
            bad = [c for c in colors if not 1 <= c <= self.kappa]
            if bad:
                raise ValueError(f"vertex {v}: colors {sorted(bad)} outside [1, {self.kappa}]")

    @property
    def n(self) -> int:
        return self.graph.n

    @classmethod
    def full_lists(cls, graph: Graph, kappa: int) -> Instance:
        palette = frozenset(range(1, kappa + 1))
        return cls(graph, kappa, (palette,) * graph.n)


def parse_instance(text: str, max_n: int = DEFAULT_MAX_N) -> Instance:
    """Parse the line-oriented ``p lc`` instance format.

    Vertices without an ``l``/``f`` line get the full palette.  Duplicate edges
    are merged; self-loops, out-of-range vertices or colors, and a second list
    line for the same vertex are errors.
    """
    header: tuple[int, int] | None = None
    edges: set[tuple[int, int]] = set()
    lists: dict[int, frozenset[int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind, args = tokens[0], tokens[1:]

        if kind == "p":
            if header is not None:
                raise InstanceParseError(lineno, "duplicate header")
            if len(args) != 4 or args[0] != "lc":
                raise InstanceParseError(lineno, "header must be 'p lc <n> <m> <kappa>'")
            try:
                n, m, kappa = (int(a) for a in args[1:])
            except ValueError:
                raise InstanceParseError(lineno, "header fields must be integers") from None
            if n < 0 or m < 0 or kappa < 0:
                raise InstanceParseError(lineno, "header fields must be non-negative")
            if n > max_n:
                raise InstanceParseError(lineno, f"n={n} exceeds the maximum {max_n}")
            header = (n, kappa)
            continue

        if header is None:
            raise InstanceParseError(lineno, "expected header 'p lc <n> <m> <kappa>' first")
        n, kappa = header
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise InstanceParseError(lineno, f"non-integer field in {raw.strip()!r}") from None

        def vertex(value: int) -> int:
            if not 1 <= value <= n:
                raise InstanceParseError(lineno, f"vertex {value} out of range 1..{n}")
            return value - 1

        if kind == "e":
            if len(nums) != 2:
                raise InstanceParseError(lineno, "edge line must be 'e <u> <v>'")
            u, v = vertex(nums[0]), vertex(nums[1])
            if u == v:
                raise InstanceParseError(lineno, f"self-loop at vertex {nums[0]}")
            edges.add((min(u, v), max(u, v)))
        elif kind in ("l", "f"):
            if not nums or (kind == "f" and len(nums) != 2):
                form = "'f <v> <c>'" if kind == "f" else "'l <v> <c1> ...'"
                raise InstanceParseError(lineno, f"list line must be {form}")
            v = vertex(nums[0])
            if v in lists:
                raise InstanceParseError(lineno, f"second list for vertex {nums[0]}")
            for c in nums[1:]:
                if not 1 <= c <= kappa:
                    raise InstanceParseError(lineno, f"color {c} outside [1, {kappa}]")
            lists[v] = frozenset(nums[1:])
        else:
            raise InstanceParseError(lineno, f"unknown line type {kind!r}")

    if header is None:
        raise InstanceParseError(0, "missing header 'p lc <n> <m> <kappa>'")
    n, kappa = header
    palette = frozenset(range(1, kappa + 1))
    graph = Graph.from_edges(n, sorted(edges))
    return Instance(graph, kappa, tuple(lists.get(v, palette) for v in range(n)))


def format_instance(inst: Instance) -> str:
    """Serialize ``inst`` so that :func:`parse_instance` reads it back unchanged."""
    edges = inst.graph.edges()
    lines = [f"p lc {inst.n} {len(edges)} {inst.kappa}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    for v, colors in enumerate(inst.lists):
        lines.append(" ".join(["l", str(v + 1), *map(str, sorted(colors))]))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Violation:
    kind: str  # "edge" or "list"
    vertices: tuple[int, ...]
    color: int


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate_coloring(inst: Instance, f: Coloring) -> ValidationReport:
    """Check that ``f`` respects every list and leaves no edge monochromatic."""
    missing = [v for v in range(inst.n) if v not in f]
    if missing:
        raise IncompleteColoringError(f"coloring misses vertices {missing}")
    violations = []
    for v in range(inst.n):
        if f[v] not in inst.lists[v]:
            violations.append(Violation("list", (v,), f[v]))
    for u, v in inst.graph.edges():
        if f[u] == f[v]:
            violations.append(Violation("edge", (u, v), f[u]))
    return ValidationReport(not violations, tuple(violations))


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        higher = g.adjacency[u] >> (u + 1) << (u + 1)
        for v in members(higher):
            if g.adjacency[v] & higher:
                return False
    return True
