"""Acceptance suite: one test per criterion, each with its runtime budget."""

import random
import time
from itertools import combinations

import pytest

from topochrom.boxcomplex import betti_gf2, box_complex, check_kunneth_product, check_suspension
from topochrom.census import nonisomorphic_graphs, random_connected_graph, random_graph
from topochrom.chromatic import chromatic_number, total_chromatic_number
from topochrom.cli import main
from topochrom.generators import (
    complete,
    cycle,
    is_stable_subset,
    kneser,
    kneser_oracle,
    path,
    petersen,
    schrijver,
    schrijver_oracle,
)
from topochrom.graph import is_proper_coloring, max_degree
from topochrom.kneser_construct import build_odd_topological_kneser, build_odd_topological_schrijver
from topochrom.minors import (
    OddMinorCertificate,
    OddTopologicalCertificate,
    Tree,
    graph_from_spec,
    lift_odd_minor_mycielski,
    topological_to_minor,
    trivial_complete_minor,
    verify,
    verify_odd_minor,
    verify_odd_topological,
)
from topochrom.subgraphs import bipartite_bound, total_graph_obstruction_check, verify_zigzag_witness, zigzag_witness


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def test_01_generators():
    with Budget(1):
        kg = kneser(5, 2)
        assert (kg.n, kg.m) == (10, 15)
        assert {kg.degree(v) for v in range(kg.n)} == {3}
        sg = schrijver(5, 2)
        assert sg.n == 5 and {sg.degree(v) for v in range(5)} == {2} and sg.is_connected()
        assert chromatic_number(sg).chi == 3
        sg7 = schrijver(7, 2)
        assert sg7.n == 14 and chromatic_number(sg7).chi == 5 == 7 - 2 * 2 + 2


def test_02_sphere_pattern():
    with Budget(60):
        for n in (2, 3, 4, 5):
            expected = [0] * (n - 1)
            expected[0] += 1
            expected[-1] += 1
            assert betti_gf2(box_complex(complete(n))) == expected


def test_03_suspension():
    rng = random.Random(20240603)
    with Budget(300):
        checked = 0
        for _ in range(60):
            g = random_connected_graph(rng.randint(2, 6), rng.random(), rng)
            assert check_suspension(g), g
            checked += 1
        assert checked >= 50


def test_04_kunneth():
    family = {"K2": complete(2), "K3": complete(3), "P3": path(3), "C5": cycle(5)}
    with Budget(600):
        for (a, f), (b, g) in combinations(list(family.items()) + [("K2'", complete(2))], 2):
            assert check_kunneth_product(f, g, cap=25), (a, b)
        for name, f in family.items():
            assert check_kunneth_product(f, f, cap=25), name


def test_05_total_graph():
    with Budget(600):
        # (a) exhaustive, Δ >= 4, up to 6 vertices
        small = [g for n in range(1, 7) for g in nonisomorphic_graphs(n)]
        big = [g for g in small if max_degree(g) >= 4]
        assert big
        assert all(total_graph_obstruction_check(g).free for g in big)
        # (b) 200 random graphs on at most 12 vertices with Δ >= 4
        rng = random.Random(5)
        done = 0
        while done < 200:
            g = random_graph(rng.randint(5, 12), rng.uniform(0.2, 0.9), rng)
            if max_degree(g) >= 4:
                assert total_graph_obstruction_check(g).free, g
                done += 1
        # (c) χ(T(G)) <= Δ + 2 on every graph up to 6 vertices
        assert all(total_chromatic_number(g) <= max_degree(g) + 2 for g in small)


def test_06_bipartite_bound():
    assert bipartite_bound(petersen()) == 3 == chromatic_number(petersen()).chi
    assert [bipartite_bound(complete(n)) for n in range(2, 9)] == list(range(2, 9))
    assert bipartite_bound(cycle(5)) == 3


def random_proper_coloring(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    palette = rng.randint(3, g.n)
    c = [None] * g.n
    for v in order:
        used = {c[u] for u in g.neighbors(v)}
        free = [x for x in range(palette) if x not in used]
        c[v] = rng.choice(free) if free else max(x for x in c if x is not None) + 1
    return c


def test_07_zigzag():
    g = petersen()
    rng = random.Random(77)
    counts = set()
    for _ in range(100):
        c = random_proper_coloring(g, rng)
        assert is_proper_coloring(g, c)
        counts.add(len(set(c)))
        w = zigzag_witness(g, c, 3)
        assert w is not None and verify_zigzag_witness(g, c, w)
    assert len(counts) > 1


@pytest.mark.parametrize("n, k", [(25, 11), (19, 7)])
def test_08_kneser_construction(n, k):
    with Budget(60):
        cert = build_odd_topological_kneser(n, k)
        host = kneser_oracle(n, k)
        assert cert.t == n - 2 * k + 2
        assert verify_odd_topological(host, cert)
        assert verify_odd_minor(host, topological_to_minor(cert))


def test_09_schrijver_construction():
    with Budget(60):
        cert = build_odd_topological_schrijver(25, 11)
        assert verify_odd_topological(schrijver_oracle(25, 11), cert)
        vertices = set(cert.branching) | {v for p in cert.paths.values() for v in p}
        assert all(is_stable_subset(v, 25) for v in vertices)


def test_10_mycielski_lift():
    with Budget(10):
        k3 = lift_odd_minor_mycielski(complete(2), trivial_complete_minor(2), 2)
        c5 = graph_from_spec(k3.host)
        assert c5.m == 5 and {c5.degree(v) for v in range(5)} == {2}
        assert k3.t == 3 and verify_odd_minor(c5, k3)
        k4 = lift_odd_minor_mycielski(c5, k3, 2)
        grotzsch = graph_from_spec(k4.host)
        assert (grotzsch.n, grotzsch.m) == (11, 20)
        assert not any(grotzsch.adj[u] & grotzsch.adj[v] for u, v in grotzsch.edges)  # triangle-free
        assert k4.t == 4 and verify_odd_minor(grotzsch, k4)
        assert chromatic_number(grotzsch).chi == 4


def _mutate_topological(cert, rng):
    branching = list(cert.branching)
    paths = dict(cert.paths)
    long_paths = [key for key, p in paths.items() if len(p) >= 4]
    if long_paths and rng.random() < 0.5:
        key = rng.choice(sorted(long_paths))
        p = paths[key]
        drop = rng.randrange(1, len(p) - 1)
        paths[key] = p[:drop] + p[drop + 1 :]
        kind = "shorten"
    else:
        i, j = rng.sample(range(len(branching)), 2)
        branching[j] = branching[i]
        kind = "duplicate"
    return kind, OddTopologicalCertificate(branching, paths, cert.host)


def _mutate_minor(cert, rng):
    trees = list(cert.trees)
    coloring = dict(cert.coloring)
    with_edges = [i for i, t in enumerate(trees) if t.edges]
    if with_edges and rng.random() < 0.5:
        i = rng.choice(with_edges)
        e = list(trees[i].edges)
        del e[rng.randrange(len(e))]
        trees[i] = Tree(trees[i].vertices, tuple(e))
        kind = "edge_delete"
    else:
        v = rng.choice(sorted(coloring, key=repr))
        coloring[v] ^= 1
        kind = "color_flip"
    return kind, OddMinorCertificate(trees, coloring, dict(cert.connectors), cert.host)


def test_11_mutation_robustness():
    rng = random.Random(11)
    topo = [build_odd_topological_kneser(25, 11), build_odd_topological_kneser(19, 7), build_odd_topological_schrijver(25, 11)]
    minors = [topological_to_minor(c) for c in topo]
    k3 = lift_odd_minor_mycielski(complete(2), trivial_complete_minor(2), 2)
    minors += [k3, lift_odd_minor_mycielski(graph_from_spec(k3.host), k3, 2), trivial_complete_minor(6)]
    assert all(verify(c) for c in topo + minors)
    kinds = {}
    total = 0
    for _ in range(700):
        kind, bad = _mutate_topological(rng.choice(topo), rng)
        verdict = verify(bad)
        assert not verdict and verdict.clause, kind
        kinds[kind] = kinds.get(kind, 0) + 1
        total += 1
    for _ in range(700):
        kind, bad = _mutate_minor(rng.choice(minors), rng)
        verdict = verify(bad)
        assert not verdict and verdict.clause, kind
        kinds[kind] = kinds.get(kind, 0) + 1
        total += 1
    assert total >= 1000
    assert set(kinds) == {"shorten", "duplicate", "edge_delete", "color_flip"}


def test_12_infeasibility(capsys):
    code = main(["construct-odd", "--n", "23", "--k", "10"])
    out, err = capsys.readouterr()
    assert code == 1
    assert "9 < 10" in err
    assert out == ""
