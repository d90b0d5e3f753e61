import itertools

import pytest
from hypothesis import strategies as st

from topochrom.graph import make_graph


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected and n > 1:
        # attach every vertex to an earlier one
        chosen += [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    return make_graph(n, chosen)


@pytest.fixture
def c5_labelled():
    """C5 on host vertices 0..4 standing for 1..5 around the cycle."""
    return make_graph(5, [(i, (i + 1) % 5) for i in range(5)])


def brute_is_kab(g, l, m):
    """Brute-force oracle: all (A, B) pairs, lexicographic in A then B."""
    for A in itertools.combinations(range(g.n), l):
        rest = [v for v in range(g.n) if v not in A]
        for B in itertools.combinations(rest, m):
            if all(g.has_edge(a, b) for a in A for b in B):
                return A, B
    return None


def brute_chromatic(g):
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return k
    raise AssertionError


def brute_alpha(g):
    for size in range(g.n, -1, -1):
        for S in itertools.combinations(range(g.n), size):
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(S, 2)):
                return size
