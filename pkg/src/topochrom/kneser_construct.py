"""Odd topological K_t subgraphs in Kneser and Schrijver graphs.

Points sit on a circle in the order given by a :class:`CircleLayout`; arcs
are runs of cyclically consecutive *positions*. The branching vertices are
short arcs (``k`` points). Each pair of branching vertices gets its own good
pattern, and its path runs through the pattern's copies inside a walk of long
arcs (``floor((n-1)/2)`` points) in which consecutive arcs are disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterator, Sequence

from .generators import KneserOracle, KneserParams, SchrijverOracle
from .minors import OddTopologicalCertificate, verify_odd_topological


class InfeasibleError(ValueError):
    """The good-pattern inequality fails, so the construction does not apply."""


@dataclass(frozen=True)
class CircleLayout:
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError("layout must be a permutation of 1..n")

    @property
    def size(self) -> int:
        return len(self.order)

    @classmethod
    def identity(cls, n: int) -> "CircleLayout":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def schrijver(cls, n: int) -> "CircleLayout":
        """``1, 3, 5, ..., n, 2, 4, ..., n-1`` for odd ``n``."""
        if n % 2 == 0:
            raise ValueError("the alternating layout needs an odd number of points")
        return cls(tuple(range(1, n + 1, 2)) + tuple(range(2, n, 2)))


@dataclass(frozen=True)
class Arc:
    start: int  # circle position, 0-based
    length: int

    def positions(self, size: int) -> list[int]:
        return [(self.start + i) % size for i in range(self.length)]

    def points(self, layout: CircleLayout) -> frozenset[int]:
        return frozenset(layout.order[p] for p in self.positions(layout.size))


def long_arc_length(n: int) -> int:
    return (n - 1) // 2


def good_patterns(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Offset sets of size ``k`` inside a long arc that contain 0, lexicographically, minus ``0..k-1``."""
    ell = long_arc_length(n)
    initial = tuple(range(k))
    for rest in combinations(range(1, ell), k - 1):
        pattern = (0,) + rest
        if pattern != initial:
            yield pattern


def good_pattern_count(n: int, k: int) -> int:
    KneserParams(n, k)
    return comb((n - 3) // 2, k - 1) - 1


def feasible(n: int, k: int) -> bool:
    t = n - 2 * k + 2
    if k < 1 or n < 2 * k + 1 or t < 5:
        return False
    return good_pattern_count(n, k) >= comb(t, 2)


def _pattern_vertex(arc_start: int, pattern: Sequence[int], layout: CircleLayout) -> tuple[int, ...]:
    return tuple(sorted(layout.order[(arc_start + o) % layout.size] for o in pattern))


def long_arc_walk(a: Arc, b: Arc, layout: CircleLayout, direction: int = 1) -> list[Arc]:
    """Long arcs ``a = s_0, ..., s_r = b`` with consecutive arcs disjoint and ``r`` even.

    Repeats the two-step shift ``s -> s+ell+1 -> s+1`` (or its mirror
    ``s -> s-ell-1 -> s-1`` for ``direction=-1``), so ``r = 2d`` where ``d`` is
    the shift from ``a`` to ``b`` in that direction.
    """
    size = layout.size
    ell = a.length
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    d = ((b.start - a.start) * direction) % size
    walk = [a]
    s = a.start
    for _ in range(d):
        walk.append(Arc((s + direction * (ell + 1)) % size, ell))
        s = (s + direction) % size
        walk.append(Arc(s, ell))
    return walk


def simple_long_arc_walk(a: Arc, b: Arc, layout: CircleLayout) -> list[Arc]:
    """An even walk whose arcs before the final one are pairwise distinct.

    The forward walk visits starts ``a..a+d-1`` and ``a+ell+1..a+ell+d``,
    distinct while ``d <= size-1-ell``; otherwise the backward walk (shift
    ``size-d``) satisfies the mirrored bound.
    """
    size = layout.size
    d = (b.start - a.start) % size
    direction = 1 if d <= size - 1 - a.length else -1
    return long_arc_walk(a, b, layout, direction)


def _build(layout: CircleLayout, k: int, t: int, host: KneserOracle) -> OddTopologicalCertificate:
    size = layout.size
    ell = long_arc_length(size)
    assert k <= ell and k + ell <= size
    pairs = list(combinations(range(t), 2))
    patterns = list(islice(good_patterns(size, k), len(pairs)))
    if len(patterns) < len(pairs):
        raise InfeasibleError(f"only {len(patterns)} good patterns for {len(pairs)} pairs")

    short = [Arc(i, k) for i in range(t)]
    branching = [tuple(sorted(arc.points(layout))) for arc in short]
    paths: dict[tuple[int, int], tuple] = {}
    seen: dict[tuple, tuple[int, int]] = {}
    for (i, j), pattern in zip(pairs, patterns):
        a = Arc((i + k) % size, ell)
        b = Arc(j, ell)
        assert not a.points(layout) & short[i].points(layout)
        assert short[j].points(layout) <= b.points(layout)
        walk = simple_long_arc_walk(a, b, layout)
        r = len(walk) - 1
        assert r % 2 == 0
        for s1, s2 in zip(walk, walk[1:]):
            assert not s1.points(layout) & s2.points(layout)
        inner = [_pattern_vertex(s.start, pattern, layout) for s in walk[:-1]]
        for v in inner:
            # a good-pattern vertex is never a short arc, and (arc, pattern) determines the vertex
            assert v not in branching
            assert v not in seen, f"inner vertex {v} reused by pairs {seen[v]} and {(i, j)}"
            seen[v] = (i, j)
        paths[(i, j)] = (branching[i], *inner, branching[j])
        assert len(paths[(i, j)]) % 2 == 0  # odd number of edges
    cert = OddTopologicalCertificate(branching, paths, host=host.describe())
    verdict = verify_odd_topological(host, cert)
    if not verdict:
        raise AssertionError(f"construction produced an invalid certificate: {verdict}")
    return cert


def _infeasible_message(n_points: int, k: int, t: int) -> str:
    return (
        f"infeasible: good patterns C({(n_points - 3) // 2},{k - 1}) - 1 = "
        f"{comb((n_points - 3) // 2, k - 1) - 1} < {comb(t, 2)} = C({t},2)"
    )


def build_odd_topological_kneser(n: int, k: int) -> OddTopologicalCertificate:
    KneserParams(n, k)
    t = n - 2 * k + 2
    if t < 5:
        raise InfeasibleError(f"infeasible: t = n-2k+2 = {t} < 5")
    if not feasible(n, k):
        raise InfeasibleError(_infeasible_message(n, k, t))
    return _build(CircleLayout.identity(n), k, t, KneserOracle(n, k))


def schrijver_feasible(n: int, k: int) -> bool:
    t = n - 2 * k + 2
    if k < 1 or n < 2 * k + 1 or t < 5:
        return False
    points = n if n % 2 else n - 1
    if points < 2 * k + 1:
        return False
    return comb((points - 3) // 2, k - 1) - 1 >= comb(t, 2)


def build_odd_topological_schrijver(n: int, k: int) -> OddTopologicalCertificate:
    """Odd topological K_t in SG(n, k), ``t = n-2k+2``.

    Odd ``n`` uses the alternating layout, under which every long arc avoids
    cyclically consecutive points. Even ``n`` drops point ``n`` and runs the
    construction on ``n-1`` points with one more branching vertex than the
    chromatic number of SG(n-1, k), i.e. ``t`` of them.
    """
    KneserParams(n, k)
    t = n - 2 * k + 2
    if t < 5:
        raise InfeasibleError(f"infeasible: t = n-2k+2 = {t} < 5")
    points = n if n % 2 else n - 1
    if not schrijver_feasible(n, k):
        raise InfeasibleError(_infeasible_message(points, k, t))
    return _build(CircleLayout.schrijver(points), k, t, SchrijverOracle(n, k))
