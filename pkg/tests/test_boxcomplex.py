import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings

from topochrom.boxcomplex import (
    BettiSequence,
    ComplexSizeError,
    betti_gf2,
    box_complex,
    box_complex0,
    check_kunneth_product,
    check_suspension,
    convolve,
    from_maximal,
    gf2_rank,
)
from topochrom.census import random_connected_graph
from topochrom.generators import complete, cycle, path, petersen
from topochrom.graph import direct_product, make_graph

from conftest import graphs


def box_by_definition(g, zero=False):
    """All (A, B) pairs over 3^n assignments, straight from the definition."""
    out = set()
    for assign in itertools.product((0, 1, 2), repeat=g.n):
        A = [v for v in range(g.n) if assign[v] == 1]
        B = [v for v in range(g.n) if assign[v] == 2]
        if not A and not B:
            continue
        if A and B:
            ok = all(g.has_edge(a, b) for a in A for b in B)
        elif zero:
            ok = True
        else:
            side = A or B
            ok = any(all(g.has_edge(u, w) for u in side) for w in range(g.n))
        if ok:
            out.add((frozenset(A), frozenset(B)))
    return out


def masks_of(k):
    n = k.n_graph
    got = set()
    for layer in k.simplices:
        for s in layer:
            got.add((frozenset(v for v in range(n) if s >> v & 1), frozenset(v for v in range(n) if s >> (n + v) & 1)))
    return got


def dense_rank_mod2(rows, ncols):
    if not rows:
        return 0
    m = np.array([[(r >> c) & 1 for c in range(ncols)] for r in rows], dtype=np.uint8)
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, m.shape[0]) if m[i, col]), None)
        if piv is None:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        for i in range(m.shape[0]):
            if i != rank and m[i, col]:
                m[i] ^= m[rank]
        rank += 1
    return rank


def betti_dense(k):
    """Independent Betti route: dense numpy elimination on boundary matrices."""
    faces = [list(layer) for layer in k.simplices]
    ranks = [0]
    for d in range(1, len(faces)):
        index = {s: i for i, s in enumerate(faces[d - 1])}
        rows = [sum(1 << index[s ^ (1 << b)] for b in range(2 * k.n_graph) if s >> b & 1) for s in faces[d]]
        ranks.append(dense_rank_mod2(rows, len(faces[d - 1])))
    ranks.append(0)
    return [len(faces[d]) - ranks[d] - ranks[d + 1] for d in range(len(faces))]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5))
def test_box_complexes_match_definition(g):
    assert masks_of(box_complex(g)) == box_by_definition(g)
    assert masks_of(box_complex0(g)) == box_by_definition(g, zero=True)


def test_box_k2_two_disjoint_edges():
    k = box_complex(complete(2))
    assert k.f_vector() == [4, 2]
    assert masks_of(k) >= {(frozenset([0]), frozenset([1])), (frozenset([1]), frozenset([0]))}
    assert betti_gf2(k) == (2,)


def test_box_k3_is_circle():
    assert betti_gf2(box_complex(complete(3))) == (1, 1)


def test_box_edgeless_is_empty():
    k = box_complex(make_graph(3, []))
    assert k.is_empty
    b = betti_gf2(k, reduced=True)
    assert b.empty and b.values == ()


def test_box0_k2_circle_and_k1_two_points():
    k0 = box_complex0(complete(2))
    assert (0b0011 in k0) and (0b1100 in k0)
    assert betti_gf2(k0) == (1, 1)
    single = box_complex0(make_graph(1, []))
    assert single.f_vector() == [2] and single.vertices() == [(0, 1), (0, 2)]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_box_subset_of_box0_and_structure(g):
    k, k0 = box_complex(g), box_complex0(g)
    assert masks_of(k) <= masks_of(k0)
    for c in (k, k0):
        assert c.is_downward_closed()
        assert c.involution_is_valid()
        if not c.is_empty:
            assert list(betti_gf2(c).values) == betti_dense(c)


def test_hollow_and_solid_triangle():
    hollow = from_maximal(3, [[(0, 1), (1, 1)], [(1, 1), (2, 1)], [(0, 1), (2, 1)]])
    solid = from_maximal(3, [[(0, 1), (1, 1), (2, 1)]])
    assert betti_gf2(hollow) == (1, 1)
    assert betti_gf2(solid) == (1, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_box_complete_is_sphere(n):
    expected = [0] * (n - 1)
    expected[0] += 1
    expected[n - 2] += 1
    assert betti_gf2(box_complex(complete(n))) == expected


def test_box_k4_pattern():
    assert betti_gf2(box_complex(complete(4))) == (1, 0, 1)


def test_betti_sequence_equality_ignores_trailing_zeros():
    assert BettiSequence((1, 0, 1, 0)) == (1, 0, 1)
    assert BettiSequence((1, 0, 0)) == [1, 0]
    assert BettiSequence((1, 1)) != (1, 0)


def test_gf2_rank_small():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0
    rng = random.Random(3)
    for _ in range(50):
        rows = [rng.getrandbits(8) for _ in range(rng.randint(1, 8))]
        assert gf2_rank(rows) == dense_rank_mod2(rows, 8)


def test_cap():
    with pytest.raises(ComplexSizeError):
        box_complex(complete(11))
    assert box_complex(path(11), cap=11).n_graph == 11


@pytest.mark.parametrize("g", [complete(2), complete(3), cycle(5), make_graph(4, []), path(4)])
def test_suspension_examples(g):
    assert check_suspension(g)


def test_suspension_random_connected():
    rng = random.Random(11)
    for _ in range(30):
        assert check_suspension(random_connected_graph(rng.randint(2, 6), rng.random(), rng))


def test_convolve():
    assert convolve([1, 1], [1, 1]) == [1, 2, 1]
    assert convolve([2], [1, 1]) == [2, 2]


@pytest.mark.parametrize(
    "f, g, expected",
    [(complete(2), complete(2), [4]), (complete(2), complete(3), [2, 2]), (complete(3), complete(3), [1, 2, 1])],
)
def test_kunneth_examples(f, g, expected):
    assert convolve(betti_gf2(box_complex(f)).values, betti_gf2(box_complex(g)).values)[: len(expected)] == expected
    assert betti_gf2(box_complex(direct_product(f, g))) == expected
    assert check_kunneth_product(f, g)


def test_kunneth_needs_edges():
    with pytest.raises(ValueError):
        check_kunneth_product(make_graph(2, []), complete(2))


def test_petersen_box_euler():
    k = box_complex(petersen())
    b = betti_gf2(k)
    assert sum((-1) ** d * x for d, x in enumerate(b.values)) == k.euler_characteristic()
