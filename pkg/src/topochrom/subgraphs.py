"""Complete bipartite subgraph search and the checkers built on it.

The searchers return witnesses; the ``verify_*`` functions re-check a witness
against the host by direct edge tests and share no code with the searchers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .generators import total_graph
from .graph import Graph, bits_to_list, is_proper_coloring, max_degree, popcount


@dataclass(frozen=True)
class BipartiteWitness:
    A: tuple[int, ...]
    B: tuple[int, ...]


@dataclass(frozen=True)
class ZigzagWitness:
    A: tuple[int, ...]
    B: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass
class BoundReport:
    """Computable evidence around the chain of topological lower bounds.

    ``ind_B`` and ``coind_B0`` stay ``None``: neither is computable in general
    and GF(2) Betti numbers do not determine them.
    """

    bipartite_bound: int
    chromatic: Optional[int] = None
    betti: Optional[list[int]] = None
    ind_B: None = field(default=None, init=False)
    coind_B0: None = field(default=None, init=False)

    def to_json(self) -> dict:
        return {"bipartite_bound": self.bipartite_bound, "chromatic": self.chromatic, "betti": self.betti}


def _first_bits(bits: int, count: int) -> tuple[int, ...]:
    out = []
    while bits and len(out) < count:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def find_complete_bipartite(g: Graph, l: int, m: int) -> Optional[BipartiteWitness]:
    """Lexicographically least ``A`` (size ``l``), then least ``B`` (size ``m``), with ``A x B`` in ``E(G)``."""
    if l < 1 or m < 1:
        raise ValueError(f"K_(l,m) needs l, m >= 1, got ({l}, {m})")
    if l + m > g.n:
        return None
    full = (1 << g.n) - 1
    adj = g.adj
    # vertices that could sit on the A side at all
    eligible = [v for v in range(g.n) if popcount(adj[v]) >= m]

    def extend(start: int, chosen: list[int], common: int) -> Optional[BipartiteWitness]:
        if len(chosen) == l:
            return BipartiteWitness(tuple(chosen), _first_bits(common, m))
        need = l - len(chosen)
        for idx in range(start, len(eligible) - need + 1):
            v = eligible[idx]
            nxt = common & adj[v]
            if popcount(nxt) < m:
                continue
            chosen.append(v)
            found = extend(idx + 1, chosen, nxt)
            chosen.pop()
            if found is not None:
                return found
        return None

    return extend(0, [], full)


def verify_bipartite_witness(g: Graph, w: BipartiteWitness, l: int | None = None, m: int | None = None) -> bool:
    A, B = set(w.A), set(w.B)
    if not A or not B or A & B or len(A) != len(w.A) or len(B) != len(w.B):
        return False
    if (l is not None and len(A) != l) or (m is not None and len(B) != m):
        return False
    if any(not (0 <= v < g.n) for v in A | B):
        return False
    return all(g.has_edge(a, b) for a in A for b in B)


def _all_splits_present(g: Graph, t: int) -> bool:
    return all(find_complete_bipartite(g, l, t - l) is not None for l in range(1, t // 2 + 1))


def bipartite_bound(g: Graph) -> int:
    """Largest ``t`` such that every ``K_(l,m)`` with ``l + m = t`` occurs in ``g``.

    Presence of all splits at ``t`` implies presence at ``t - 1``, so the level
    predicate is monotone and a binary search suffices.
    """
    if g.m == 0:
        raise ValueError("bipartite bound is undefined for an edgeless graph")
    lo, hi = 2, min(g.n, max_degree(g) + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _all_splits_present(g, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def zigzag_witness(g: Graph, coloring: Mapping[int, int] | Sequence[int], t: int) -> Optional[ZigzagWitness]:
    """Colorful ``K_(ceil(t/2), floor(t/2))`` whose sorted colors alternate between the sides.

    Colors of rank 1, 3, 5, ... (1-based, increasing order) sit on side ``A``.
    Color sets are tried in lexicographic order, vertices in increasing order.
    """
    if t < 2:
        raise ValueError("zig-zag level t must be at least 2")
    if not is_proper_coloring(g, coloring):
        raise ValueError("zig-zag search needs a proper coloring")
    c = [coloring[v] for v in range(g.n)]
    classes: dict[int, int] = {}
    for v, col in enumerate(c):
        classes[col] = classes.get(col, 0) | (1 << v)
    palette = sorted(classes)
    adj = g.adj

    def place(colors: tuple[int, ...], rank: int, cand_a: int, cand_b: int, a: list[int], b: list[int]):
        if rank == len(colors):
            return ZigzagWitness(tuple(a), tuple(b), colors)
        on_a = rank % 2 == 0
        pool = classes[colors[rank]] & (cand_a if on_a else cand_b)
        for v in bits_to_list(pool):
            (a if on_a else b).append(v)
            if on_a:
                found = place(colors, rank + 1, cand_a, cand_b & adj[v], a, b)
            else:
                found = place(colors, rank + 1, cand_a & adj[v], cand_b, a, b)
            (a if on_a else b).pop()
            if found is not None:
                return found
        return None

    full = (1 << g.n) - 1
    for colors in combinations(palette, t):
        found = place(colors, 0, full, full, [], [])
        if found is not None:
            return found
    return None


def verify_zigzag_witness(g: Graph, coloring: Mapping[int, int] | Sequence[int], w: ZigzagWitness) -> bool:
    t = len(w.A) + len(w.B)
    if len(w.A) != (t + 1) // 2 or len(w.B) != t // 2 or t < 2:
        return False
    if set(w.A) & set(w.B):
        return False
    if not all(g.has_edge(a, b) for a in w.A for b in w.B):
        return False
    vertex_colors = sorted((coloring[v], side) for side, vs in (("A", w.A), ("B", w.B)) for v in vs)
    if len({col for col, _ in vertex_colors}) != t or [col for col, _ in vertex_colors] != list(w.colors):
        return False
    return all(side == ("A" if i % 2 == 0 else "B") for i, (_, side) in enumerate(vertex_colors))


@dataclass(frozen=True)
class ObstructionVerdict:
    """Outcome of searching ``K_(2, Delta+1)`` in the total graph."""

    delta: int
    witness: Optional[BipartiteWitness]

    @property
    def free(self) -> bool:
        return self.witness is None


def total_graph_obstruction_check(g: Graph) -> ObstructionVerdict:
    """Search ``K_(2, Delta+1)`` in ``T(g)``.

    For ``Delta >= 4`` such a subgraph cannot exist; for ``Delta <= 3`` it may,
    and whatever the search finds is reported.
    """
    delta = max_degree(g)
    if delta < 1:
        raise ValueError("total-graph obstruction check needs max degree >= 1")
    return ObstructionVerdict(delta, find_complete_bipartite(total_graph(g), 2, delta + 1))
