"""Graph families: Kneser, Schrijver, generalized Mycielskian, total graph, small standard graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .graph import Graph, GraphError, Vertex, make_graph

MATERIALIZATION_CAP = 10**6


class SizeCapError(GraphError):
    """Explicit construction would exceed the vertex cap; use the oracle form instead."""


@dataclass(frozen=True)
class KneserParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 2 * self.k + 1:
            raise GraphError(f"Kneser graph KG({self.n},{self.k}) needs k >= 1 and n > 2k")

    @property
    def chromatic(self) -> int:
        return self.n - 2 * self.k + 2


def subset_label(s: Sequence[int]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def is_stable_subset(s: Sequence[int], n: int) -> bool:
    """No two cyclically consecutive elements of ``1..n`` (the Schrijver vertex condition)."""
    members = set(s)
    if 1 in members and n in members:
        return False
    return not any(i + 1 in members for i in members)


def _subset_graph(subsets: list[tuple[int, ...]]) -> Graph:
    masks = [sum(1 << x for x in s) for s in subsets]
    edges = [(i, j) for i in range(len(masks)) for j in range(i + 1, len(masks)) if not masks[i] & masks[j]]
    return make_graph(len(subsets), edges, [subset_label(s) for s in subsets])


def kneser(n: int, k: int, cap: int = MATERIALIZATION_CAP) -> Graph:
    """KG(n, k) with vertices the k-subsets of 1..n in lexicographic order."""
    KneserParams(n, k)
    if comb(n, k) > cap:
        raise SizeCapError(f"KG({n},{k}) has {comb(n, k)} vertices > cap {cap}; use kneser_oracle")
    return _subset_graph(list(combinations(range(1, n + 1), k)))


def schrijver(n: int, k: int, cap: int = MATERIALIZATION_CAP) -> Graph:
    KneserParams(n, k)
    if comb(n, k) > cap:
        raise SizeCapError(f"SG({n},{k}) candidate pool C({n},{k}) exceeds cap {cap}; use schrijver_oracle")
    return _subset_graph([s for s in combinations(range(1, n + 1), k) if is_stable_subset(s, n)])


@dataclass(frozen=True)
class KneserOracle:
    """Implicit KG(n, k); vertices are sorted k-tuples over 1..n."""

    n: int
    k: int

    def __post_init__(self) -> None:
        KneserParams(self.n, self.k)

    def is_vertex(self, v: Vertex) -> bool:
        if not isinstance(v, tuple) or len(v) != self.k:
            return False
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            return False
        return all(1 <= x <= self.n for x in v) and all(a < b for a, b in zip(v, v[1:]))

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return self.is_vertex(u) and self.is_vertex(v) and not set(u) & set(v)

    def describe(self) -> dict:
        return {"family": "kneser", "params": [self.n, self.k]}


@dataclass(frozen=True)
class SchrijverOracle(KneserOracle):
    def is_vertex(self, v: Vertex) -> bool:
        return super().is_vertex(v) and is_stable_subset(v, self.n)

    def describe(self) -> dict:
        return {"family": "schrijver", "params": [self.n, self.k]}


def kneser_oracle(n: int, k: int) -> KneserOracle:
    return KneserOracle(n, k)


def schrijver_oracle(n: int, k: int) -> SchrijverOracle:
    return SchrijverOracle(n, k)


def mycielskian(g: Graph, r: int) -> Graph:
    """r-level generalized Mycielskian.

    Vertex ``(v, i)`` is numbered ``i * g.n + v``; the apex ``z`` is ``r * g.n``.
    """
    if r < 1:
        raise GraphError(f"Mycielskian needs r >= 1, got {r}")
    n = g.n
    edges = []
    for u, v in g.edges:
        edges.append((u, v))  # i = j = 0
        for i in range(r - 1):
            edges.append((i * n + u, (i + 1) * n + v))
            edges.append((i * n + v, (i + 1) * n + u))
    z = r * n
    edges.extend(((r - 1) * n + u, z) for u in range(n))
    labels = [f"({g.label(v)},{i})" for i in range(r) for v in range(n)] + ["z"]
    return make_graph(r * n + 1, edges, labels)


def total_graph(g: Graph) -> Graph:
    """T(G): vertices of G (ids 0..n-1) followed by its edges (ids n..n+m-1)."""
    n = g.n
    edges = list(g.edges)
    for idx, (u, v) in enumerate(g.edges):
        edges.append((u, n + idx))
        edges.append((v, n + idx))
    for i, e in enumerate(g.edges):
        for j in range(i + 1, g.m):
            if set(e) & set(g.edges[j]):
                edges.append((n + i, n + j))
    labels = [g.label(v) for v in range(n)] + [f"{g.label(u)}-{g.label(v)}" for u, v in g.edges]
    return make_graph(n + g.m, edges, labels)


def complete(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    return kneser(5, 2)


STANDARD = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "complete_bipartite": complete_bipartite,
    "petersen": petersen,
}


def standard_graph(name: str, *params: int) -> Graph:
    try:
        build = STANDARD[name]
    except KeyError:
        raise GraphError(f"unknown standard graph {name!r}; known: {sorted(STANDARD)}") from None
    return build(*params)
