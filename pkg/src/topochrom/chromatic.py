"""Exact chromatic number, independence number and related family formulas."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .generators import KneserParams, total_graph
from .graph import Graph, bits_to_list, popcount

SOLVER_CAP = 40


class SolverCapError(ValueError):
    pass


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness: tuple[int, ...]


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SolverCapError(f"exact solver capped at {cap} vertices, graph has {g.n}")


def _greedy_clique(g: Graph) -> list[int]:
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(bits_to_list(cand), key=lambda u: popcount(g.adj[u] & cand))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    color = [-1] * g.n
    for _ in range(g.n):
        v = _pick(g, color)
        used = {color[u] for u in g.neighbors(v)}
        color[v] = next(c for c in range(g.n) if c not in used)
    return color


def _pick(g: Graph, color: list[int]) -> int:
    """Uncolored vertex of maximum saturation, ties by degree then index."""
    best, key = -1, None
    for v in range(g.n):
        if color[v] >= 0:
            continue
        sat = len({color[u] for u in g.neighbors(v) if color[u] >= 0})
        k = (sat, g.degree(v), -v)
        if key is None or k > key:
            best, key = v, k
    return best


def _k_colorable(g: Graph, k: int, seed: list[int]) -> list[int] | None:
    """Backtracking k-coloring with saturation branching; ``seed`` (a clique) is precolored."""
    color = [-1] * g.n
    # forbidden[v]: bitmask of colors already on neighbors of v
    forbidden = [0] * g.n
    full = (1 << k) - 1

    def assign(v: int, c: int) -> list[int]:
        color[v] = c
        touched = []
        for u in g.neighbors(v):
            if color[u] < 0 and not (forbidden[u] >> c) & 1:
                forbidden[u] |= 1 << c
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        color[v] = -1
        for u in touched:
            forbidden[u] &= ~(1 << c)

    for i, v in enumerate(seed):
        if (forbidden[v] >> i) & 1:
            return None
        assign(v, i)

    def solve(used: int) -> bool:
        v, key = -1, None
        for u in range(g.n):
            if color[u] >= 0:
                continue
            sat = popcount(forbidden[u])
            if sat == k:
                return False
            kk = (sat, g.degree(u))
            if key is None or kk > key:
                v, key = u, kk
        if v < 0:
            return True
        options = full & ~forbidden[v]
        for c in bits_to_list(options):
            if c > used:
                break  # fresh colors are interchangeable; try only the first
            touched = assign(v, c)
            if solve(max(used, c + 1)):
                return True
            undo(v, c, touched)
        return False

    return color if solve(len(seed)) else None


def chromatic_number(g: Graph, cap: int = SOLVER_CAP) -> ChromaticResult:
    """Exact chromatic number by clique-seeded, saturation-ordered search over increasing color counts."""
    _check_cap(g, cap)
    if g.n == 0:
        return ChromaticResult(0, ())
    upper = _dsatur_greedy(g)
    ub = max(upper) + 1
    clique = _greedy_clique(g)
    for k in range(len(clique), ub):
        found = _k_colorable(g, k, clique)
        if found is not None:
            return ChromaticResult(k, tuple(found))
    return ChromaticResult(ub, tuple(upper))


def independence_number(g: Graph, cap: int = SOLVER_CAP) -> int:
    """Exact α(G): maximum clique of the complement, greedy-coloring bound."""
    _check_cap(g, cap)
    full = (1 << g.n) - 1
    comp = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    best = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy coloring of the complement restricted to cand; returns (vertex, color) in color order
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low & ~comp[v]
                rest &= ~low
                order.append((v, color))
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, col in reversed(order):
            if size + col <= best:
                return
            expand(size + 1, cand & comp[v])
            cand &= ~(1 << v)
        if not order and size > best:
            best = size

    expand(0, full)
    return best


def kneser_fractional_chromatic(n: int, k: int) -> Fraction:
    KneserParams(n, k)
    return Fraction(n, k)


def total_chromatic_number(g: Graph, cap: int = SOLVER_CAP) -> int:
    return chromatic_number(total_graph(g), cap).chi
