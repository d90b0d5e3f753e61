"""Finite simple graphs, implicit adjacency oracles, colorings and homomorphisms.

Vertices of an explicit :class:`Graph` are the dense integers ``0..n-1``;
adjacency is kept both as a sorted edge tuple and as per-vertex int bitsets.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Iterator, Mapping, Protocol, Sequence, runtime_checkable


class GraphError(ValueError):
    """Invalid graph construction (loops, out-of-range endpoints, bad parameters)."""


class GraphFormatError(ValueError):
    """Malformed edge-list text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    adj: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(bits))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph on ``keep``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = tuple(self.label(v) for v in keep) if self.labels is not None else None
        return make_graph(len(keep), edges, labels)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits_to_list(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


def bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def popcount(bits: int) -> int:
    return bits.bit_count()


def make_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    norm = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        norm.add((u, v) if u < v else (v, u))
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    return Graph(n, tuple(sorted(norm)), labels)


def max_degree(g: Graph) -> int:
    return max((popcount(b) for b in g.adj), default=0)


def _as_total_map(f: Mapping[int, Any] | Sequence[Any], n: int, what: str) -> list[Any]:
    if isinstance(f, Mapping):
        missing = [v for v in range(n) if v not in f]
        if missing:
            raise ValueError(f"{what} is not total: missing vertex {missing[0]}")
        return [f[v] for v in range(n)]
    f = list(f)
    if len(f) != n:
        raise ValueError(f"{what} is not total: {len(f)} entries for {n} vertices")
    return f


def is_proper_coloring(g: Graph, coloring: Mapping[int, int] | Sequence[int]) -> bool:
    c = _as_total_map(coloring, g.n, "coloring")
    if any((not isinstance(x, int)) or x < 0 for x in c):
        raise ValueError("colors must be non-negative integers")
    return all(c[u] != c[v] for u, v in g.edges)


def is_homomorphism(f_graph: Graph, g_graph: Graph, f: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``f`` sends every edge of ``f_graph`` onto an edge of ``g_graph``."""
    image = _as_total_map(f, f_graph.n, "vertex map")
    for x in image:
        if not (isinstance(x, int) and 0 <= x < g_graph.n):
            raise ValueError(f"vertex map sends a vertex to {x!r}, not a vertex of the target")
    return all(g_graph.has_edge(image[u], image[v]) for u, v in f_graph.edges)


def direct_product(f: Graph, g: Graph) -> Graph:
    """Categorical product: ``(f1,g1)~(f2,g2)`` iff both coordinates are edges.

    Vertex ``(a, b)`` is numbered ``a * g.n + b``.
    """
    edges = []
    for a1, a2 in f.edges:
        for b1, b2 in g.edges:
            edges.append((a1 * g.n + b1, a2 * g.n + b2))
            edges.append((a1 * g.n + b2, a2 * g.n + b1))
    labels = [f"({f.label(a)},{g.label(b)})" for a in range(f.n) for b in range(g.n)]
    return make_graph(f.n * g.n, edges, labels)


def projections(f: Graph, g: Graph) -> tuple[list[int], list[int]]:
    """Coordinate projections of ``direct_product(f, g)`` as vertex maps."""
    pf = [v // g.n for v in range(f.n * g.n)]
    pg = [v % g.n for v in range(f.n * g.n)]
    return pf, pg


# -- implicit graphs ---------------------------------------------------------

Vertex = Hashable


@runtime_checkable
class AdjacencyOracle(Protocol):
    def is_vertex(self, v: Vertex) -> bool: ...

    def adjacent(self, u: Vertex, v: Vertex) -> bool: ...

    def describe(self) -> dict: ...


@dataclass(frozen=True)
class GraphOracle:
    """Oracle view of an explicit graph; vertices are integer ids."""

    graph: Graph
    spec: dict | None = None

    def is_vertex(self, v: Vertex) -> bool:
        return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.graph.n

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return self.is_vertex(u) and self.is_vertex(v) and self.graph.has_edge(u, v)

    def describe(self) -> dict:
        if self.spec is not None:
            return self.spec
        return {"family": "explicit", "params": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]}}


def as_oracle(host: Graph | AdjacencyOracle) -> AdjacencyOracle:
    return GraphOracle(host) if isinstance(host, Graph) else host


# -- edge-list text format -------------------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str | io.TextIOBase) -> Graph:
    """Parse ``p <n> <m>`` followed by ``e <u> <v>`` lines; ``c`` lines are comments."""
    if not isinstance(text, str):
        text = text.read()
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise GraphFormatError(f"non-integer field in {raw.strip()!r}", lineno) from None
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(nums) != 2 or min(nums) < 0:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            n, m = nums
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge before header", lineno)
            if len(nums) != 2:
                raise GraphFormatError("edge must be 'e <u> <v>'", lineno)
            u, v = nums
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"invalid edge ({u}, {v}) for n={n}", lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line tag {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return make_graph(n, edges)


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v
