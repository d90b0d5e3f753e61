"""Small-graph census: all graphs on ``n`` vertices up to isomorphism, and random graphs.

Isomorphism classes are deduplicated by a canonical code: color refinement
orders the vertices into cells, then every ordering that respects the cells
is tried and the largest upper-triangle adjacency code wins.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .graph import Graph, make_graph


def _refine(n: int, adj: list[int]) -> list[int]:
    colors = [bin(adj[v]).count("1") for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in range(n) if adj[v] >> u & 1))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_code(n: int, adj: list[int]) -> tuple[int, int]:
    colors = _refine(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = -1
    for choice in product(*(permutations(cell) for cell in cells)):
        order = [v for part in choice for v in part]
        code = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                code = (code << 1) | (row >> order[j] & 1)
        if code > best:
            best = code
    return n, best


def _graph_from_adj(n: int, adj: list[int]) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    reps: dict[tuple[int, int], tuple[int, ...]] = {}
    for base in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = list(base) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    adj[u] |= 1 << (n - 1)
            code = canonical_code(n, adj)
            reps.setdefault(code, tuple(adj))
    return tuple(reps[c] for c in sorted(reps))


def nonisomorphic_graphs(n: int) -> Iterator[Graph]:
    """Every graph on exactly ``n`` vertices, one per isomorphism class, in a fixed order."""
    for adj in _classes(n):
        yield _graph_from_adj(n, list(adj))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return make_graph(n, edges)
