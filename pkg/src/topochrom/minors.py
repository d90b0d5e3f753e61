"""Odd K_t minor / odd topological K_t certificates and their verifiers.

A certificate is checked against an :class:`~topochrom.graph.AdjacencyOracle`,
so hosts such as KG(25, 11) are never materialized. Verifiers report the first
violated clause by name; a vertex the host does not know raises
:class:`HostVertexError` instead.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable, Optional

from .generators import mycielskian
from .graph import AdjacencyOracle, Graph, GraphOracle, Vertex, as_oracle

Pair = tuple[int, int]


class HostVertexError(ValueError):
    """A certificate names something that is not a vertex of the host."""


class CertificateFormatError(ValueError):
    """Malformed certificate JSON; the message names the offending field."""


class InvalidCertificateError(ValueError):
    def __init__(self, verdict: "Verdict"):
        self.verdict = verdict
        super().__init__(f"invalid certificate: {verdict}")


@dataclass(frozen=True)
class Verdict:
    valid: bool
    clause: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        return "valid" if self.valid else f"{self.clause}: {self.detail}"


VALID = Verdict(True)


def _fail(clause: str, detail: str) -> Verdict:
    return Verdict(False, clause, detail)


@dataclass(frozen=True)
class Tree:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[Vertex, Vertex], ...] = ()


@dataclass
class OddMinorCertificate:
    trees: list[Tree]
    coloring: dict[Vertex, int]
    connectors: Optional[dict[Pair, tuple[Vertex, Vertex]]] = None
    host: Optional[dict] = None

    @property
    def t(self) -> int:
        return len(self.trees)


@dataclass
class OddTopologicalCertificate:
    branching: list[Vertex]
    paths: dict[Pair, tuple[Vertex, ...]]
    host: Optional[dict] = None

    @property
    def t(self) -> int:
        return len(self.branching)


def _all_pairs(t: int) -> list[Pair]:
    return list(combinations(range(t), 2))


def _require_vertices(host: AdjacencyOracle, vertices: Iterable[Vertex]) -> None:
    for v in vertices:
        if not host.is_vertex(v):
            raise HostVertexError(f"{v!r} is not a vertex of {host.describe().get('family', 'host')}")


def _is_tree(vertices: tuple[Vertex, ...], edges: tuple[tuple[Vertex, Vertex], ...]) -> bool:
    if len(set(map(frozenset, edges))) != len(edges) or len(edges) != len(vertices) - 1:
        return False
    parent = {v: v for v in vertices}

    def find(x: Vertex) -> Vertex:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def verify_odd_minor(host: Graph | AdjacencyOracle, cert: OddMinorCertificate) -> Verdict:
    host = as_oracle(host)
    t = cert.t
    if t < 2:
        return _fail("structure", f"need at least 2 trees, got {t}")
    for i, tree in enumerate(cert.trees):
        if not tree.vertices:
            return _fail("structure", f"tree {i} is empty")
        if len(set(tree.vertices)) != len(tree.vertices):
            return _fail("structure", f"tree {i} lists a vertex twice")
    _require_vertices(host, (v for tree in cert.trees for v in tree.vertices))
    _require_vertices(host, cert.coloring)

    owner: dict[Vertex, int] = {}
    for i, tree in enumerate(cert.trees):
        for v in tree.vertices:
            if v in owner:
                return _fail("disjointness", f"vertex {v!r} lies in trees {owner[v]} and {i}")
            owner[v] = i

    for i, tree in enumerate(cert.trees):
        members = set(tree.vertices)
        for u, v in tree.edges:
            if u not in members or v not in members:
                return _fail("tree_edge", f"tree {i} edge ({u!r}, {v!r}) leaves the tree")
            if not host.adjacent(u, v):
                return _fail("tree_edge", f"tree {i} edge ({u!r}, {v!r}) is not a host edge")
        if not _is_tree(tree.vertices, tree.edges):
            return _fail("acyclicity", f"tree {i} is not a spanning tree of its vertices")

    color = cert.coloring
    if set(color) != set(owner):
        extra = set(color) ^ set(owner)
        return _fail("coloring", f"coloring domain differs from tree vertices at {next(iter(extra))!r}")
    for v, c in color.items():
        if c not in (0, 1):
            return _fail("coloring", f"vertex {v!r} has color {c!r}, not 0/1")
    for i, tree in enumerate(cert.trees):
        for u, v in tree.edges:
            if color[u] == color[v]:
                return _fail("coloring", f"tree {i} edge ({u!r}, {v!r}) is monochromatic")

    if cert.connectors is not None:
        _require_vertices(host, (x for e in cert.connectors.values() for x in e))
        unknown = set(cert.connectors) - set(_all_pairs(t))
        if unknown:
            return _fail("connector", f"connector key {min(unknown)} is not a tree pair i<j")
    for i, j in _all_pairs(t):
        if cert.connectors is None:
            if _find_connector(host, cert, i, j) is None:
                return _fail("connector", f"no same-colored edge between trees {i} and {j}")
            continue
        edge = cert.connectors.get((i, j))
        if edge is None:
            return _fail("connector", f"missing connector for trees ({i}, {j})")
        u, v = edge
        if owner.get(u) != i or owner.get(v) != j:
            return _fail("connector", f"connector ({i}, {j}) = ({u!r}, {v!r}) does not join tree {i} to tree {j}")
        if not host.adjacent(u, v):
            return _fail("connector", f"connector ({i}, {j}) = ({u!r}, {v!r}) is not a host edge")
        if color[u] != color[v]:
            return _fail("connector", f"connector ({i}, {j}) joins colors {color[u]} and {color[v]}")

    # implied by the connectors between singletons; kept as a consistency check
    singleton_colors = {color[tree.vertices[0]] for tree in cert.trees if len(tree.vertices) == 1}
    if len(singleton_colors) > 1:
        return _fail("singleton_colors", "singleton trees carry different colors")
    return VALID


def _find_connector(host: AdjacencyOracle, cert: OddMinorCertificate, i: int, j: int):
    color = cert.coloring
    for u in cert.trees[i].vertices:
        for v in cert.trees[j].vertices:
            if color[u] == color[v] and host.adjacent(u, v):
                return u, v
    return None


def verify_odd_topological(host: Graph | AdjacencyOracle, cert: OddTopologicalCertificate) -> Verdict:
    host = as_oracle(host)
    t = cert.t
    if t < 2:
        return _fail("structure", f"need at least 2 branching vertices, got {t}")
    _require_vertices(host, cert.branching)
    _require_vertices(host, (v for p in cert.paths.values() for v in p))
    if len(set(cert.branching)) != t:
        return _fail("distinct_branching", "branching vertices repeat")
    if set(cert.paths) != set(_all_pairs(t)):
        missing = set(_all_pairs(t)) - set(cert.paths)
        what = f"missing path {min(missing)}" if missing else "path keyed by a non-pair"
        return _fail("structure", what)

    branching = set(cert.branching)
    used: dict[Vertex, Pair] = {}
    for (i, j), p in sorted(cert.paths.items()):
        if len(p) < 2 or p[0] != cert.branching[i] or p[-1] != cert.branching[j]:
            return _fail("structure", f"path ({i}, {j}) does not run from branching[{i}] to branching[{j}]")
        for u, v in zip(p, p[1:]):
            if not host.adjacent(u, v):
                return _fail("path_edge", f"path ({i}, {j}) step ({u!r}, {v!r}) is not a host edge")
        if (len(p) - 1) % 2 == 0:
            return _fail("odd_length", f"path ({i}, {j}) has {len(p) - 1} edges")
        if len(set(p)) != len(p):
            return _fail("path_simple", f"path ({i}, {j}) revisits a vertex")
        for v in p[1:-1]:
            if v in branching:
                return _fail("internal_disjointness", f"path ({i}, {j}) passes through branching vertex {v!r}")
            if v in used:
                return _fail("internal_disjointness", f"paths {used[v]} and ({i}, {j}) share {v!r}")
            used[v] = (i, j)
    return VALID


def topological_to_minor(
    cert: OddTopologicalCertificate, host: Graph | AdjacencyOracle | None = None
) -> OddMinorCertificate:
    """Split every odd path at its middle edge.

    Branching vertices get color 0 and each tree is colored by distance parity
    from its branching vertex, so the two middle vertices of a path with
    ``2s + 1`` edges both get color ``s % 2``.
    """
    if host is None and cert.host is not None:
        host = host_from_spec(cert.host)
    if host is not None:
        verdict = verify_odd_topological(host, cert)
        if not verdict:
            raise InvalidCertificateError(verdict)
    t = cert.t
    tree_vertices: list[list[Vertex]] = [[b] for b in cert.branching]
    tree_edges: list[list[tuple[Vertex, Vertex]]] = [[] for _ in range(t)]
    coloring: dict[Vertex, int] = {b: 0 for b in cert.branching}
    connectors: dict[Pair, tuple[Vertex, Vertex]] = {}
    for (i, j), p in sorted(cert.paths.items()):
        edges = len(p) - 1
        if edges % 2 == 0:
            raise InvalidCertificateError(_fail("odd_length", f"path ({i}, {j}) has {edges} edges"))
        s = edges // 2
        for pos in range(1, s + 1):
            tree_vertices[i].append(p[pos])
            tree_edges[i].append((p[pos - 1], p[pos]))
            coloring[p[pos]] = pos % 2
        for pos in range(s + 1, edges):
            tree_vertices[j].append(p[pos])
            tree_edges[j].append((p[pos], p[pos + 1]))
            coloring[p[pos]] = (edges - pos) % 2
        connectors[(i, j)] = (p[s], p[s + 1])
    trees = [Tree(tuple(vs), tuple(es)) for vs, es in zip(tree_vertices, tree_edges)]
    return OddMinorCertificate(trees, coloring, connectors, host=cert.host)


def trivial_complete_minor(t: int) -> OddMinorCertificate:
    """Odd K_t minor of K_t: singleton trees, all colored 0, every edge a connector."""
    spec = {"family": "complete", "params": [t]}
    return OddMinorCertificate(
        [Tree((v,)) for v in range(t)],
        {v: 0 for v in range(t)},
        {(i, j): (i, j) for i, j in _all_pairs(t)},
        host=spec,
    )


def lift_odd_minor_mycielski(g: Graph, cert: OddMinorCertificate, r: int) -> OddMinorCertificate:
    """Odd K_{t+1} minor of ``mycielskian(g, r)`` from an odd K_t minor of connected ``g``.

    The old trees sit on level 0 with their colors. "Blue" is the common color
    of singleton trees (0 if there are none); the new tree is a BFS spanning
    tree of the upper levels and the apex rooted at the apex, colored so that
    level 1 is blue.
    """
    if r < 1:
        raise ValueError(f"Mycielskian level count must be >= 1, got {r}")
    if not g.is_connected():
        raise ValueError("lift needs a connected graph")
    verdict = verify_odd_minor(g, cert)
    if not verdict:
        raise InvalidCertificateError(verdict)
    n = g.n
    z = r * n
    m = mycielskian(g, r)

    singles = {cert.coloring[tr.vertices[0]] for tr in cert.trees if len(tr.vertices) == 1}
    blue = singles.pop() if singles else 0

    def level(x: int) -> int:
        return r if x == z else x // n

    parent = {z: None}
    queue = deque([z])
    while queue:
        x = queue.popleft()
        for y in m.neighbors(x):
            if y >= n and y not in parent:
                parent[y] = x
                queue.append(y)
    assert len(parent) == z + 1 - n, "upper levels of a connected Mycielskian are connected"
    new_vertices = tuple(sorted(parent))
    new_edges = tuple((parent[y], y) for y in new_vertices if parent[y] is not None)

    coloring = dict(cert.coloring)
    for x in new_vertices:
        coloring[x] = blue if level(x) % 2 == 1 else 1 - blue

    connectors = dict(cert.connectors or {})
    if cert.connectors is None:
        for i, j in _all_pairs(cert.t):
            connectors[(i, j)] = _find_connector(GraphOracle(g), cert, i, j)
    t = cert.t
    for i, tree in enumerate(cert.trees):
        u = min(v for v in tree.vertices if coloring[v] == blue)
        partner = z if r == 1 else n + g.neighbors(u)[0]
        connectors[(i, t)] = (u, partner)

    base = cert.host if cert.host is not None else GraphOracle(g).describe()
    return OddMinorCertificate(
        list(cert.trees) + [Tree(new_vertices, new_edges)],
        coloring,
        connectors,
        host={"family": "mycielskian", "params": {"base": base, "r": r}},
    )


# -- hosts -------------------------------------------------------------------


def graph_from_spec(spec: dict) -> Graph:
    """Materialize an explicit host described by a ``{"family", "params"}`` spec."""
    from . import generators as gen
    from .graph import make_graph

    try:
        family, params = spec["family"], spec.get("params", [])
    except (KeyError, TypeError, AttributeError):
        raise CertificateFormatError("host: expected an object with 'family' and 'params'") from None
    try:
        if family == "explicit":
            return make_graph(params["n"], [tuple(e) for e in params["edges"]])
        if family == "mycielskian":
            return gen.mycielskian(graph_from_spec(params["base"]), int(params["r"]))
        if family == "total":
            return gen.total_graph(graph_from_spec(params["base"]))
        if family == "kneser":
            return gen.kneser(*params)
        if family == "schrijver":
            return gen.schrijver(*params)
        if family in gen.STANDARD:
            return gen.standard_graph(family, *params)
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"host: bad params for family {family!r}: {exc}") from None
    raise CertificateFormatError(f"host: unknown family {family!r}")


def host_from_spec(spec: dict) -> AdjacencyOracle:
    from .generators import KneserOracle, SchrijverOracle

    family = spec.get("family") if isinstance(spec, dict) else None
    if family in ("kneser", "schrijver"):
        params = spec.get("params")
        if not (isinstance(params, list) and len(params) == 2 and all(isinstance(x, int) for x in params)):
            raise CertificateFormatError(f"host: {family} params must be [n, k]")
        cls = KneserOracle if family == "kneser" else SchrijverOracle
        try:
            return cls(*params)
        except ValueError as exc:
            raise CertificateFormatError(f"host: {exc}") from None
    return GraphOracle(graph_from_spec(spec), spec)


# -- JSON --------------------------------------------------------------------


def _enc(v: Vertex) -> Any:
    return list(v) if isinstance(v, tuple) else v


def _key(v: Vertex) -> str:
    return json.dumps(_enc(v), separators=(",", ":"))


def _dec(x: Any, where: str) -> Vertex:
    if isinstance(x, bool):
        raise CertificateFormatError(f"{where}: vertex must be an integer or an integer array")
    if isinstance(x, int):
        return x
    if isinstance(x, list) and all(isinstance(y, int) and not isinstance(y, bool) for y in x):
        return tuple(x)
    raise CertificateFormatError(f"{where}: vertex must be an integer or an integer array, got {x!r}")


def _pair_key(p: Pair) -> str:
    return f"{p[0]},{p[1]}"


def _dec_pair(key: str, where: str) -> Pair:
    try:
        i, j = (int(x) for x in key.split(","))
    except ValueError:
        raise CertificateFormatError(f"{where}: key {key!r} is not 'i,j'") from None
    return i, j


def cert_to_json(cert: OddMinorCertificate | OddTopologicalCertificate) -> dict:
    out: dict[str, Any] = {"host": cert.host}
    if isinstance(cert, OddTopologicalCertificate):
        out["kind"] = "odd_topological"
        out["branching"] = [_enc(v) for v in cert.branching]
        out["paths"] = {_pair_key(p): [_enc(v) for v in cert.paths[p]] for p in sorted(cert.paths)}
        return out
    out["kind"] = "odd_minor"
    out["trees"] = [
        {"vertices": [_enc(v) for v in tr.vertices], "edges": [[_enc(u), _enc(v)] for u, v in tr.edges]}
        for tr in cert.trees
    ]
    order = [v for tr in cert.trees for v in tr.vertices]
    order += [v for v in cert.coloring if v not in set(order)]
    out["coloring"] = {_key(v): cert.coloring[v] for v in order if v in cert.coloring}
    if cert.connectors is not None:
        out["connectors"] = {_pair_key(p): [_enc(x) for x in cert.connectors[p]] for p in sorted(cert.connectors)}
    return out


def dumps(cert: OddMinorCertificate | OddTopologicalCertificate) -> str:
    return json.dumps(cert_to_json(cert), separators=(",", ":")) + "\n"


def cert_from_json(data: Any) -> OddMinorCertificate | OddTopologicalCertificate:
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    host = data.get("host")
    if host is not None and not isinstance(host, dict):
        raise CertificateFormatError("host: expected an object")
    kind = data.get("kind")
    if kind == "odd_topological":
        branching = data.get("branching")
        paths = data.get("paths")
        if not isinstance(branching, list) or not isinstance(paths, dict):
            raise CertificateFormatError("odd_topological needs 'branching' (array) and 'paths' (object)")
        out_paths = {}
        for key, p in paths.items():
            if not isinstance(p, list):
                raise CertificateFormatError(f"paths[{key!r}]: expected an array")
            out_paths[_dec_pair(key, "paths")] = tuple(_dec(v, f"paths[{key!r}][{n}]") for n, v in enumerate(p))
        return OddTopologicalCertificate(
            [_dec(v, f"branching[{n}]") for n, v in enumerate(branching)], out_paths, host
        )
    if kind == "odd_minor":
        trees = data.get("trees")
        coloring = data.get("coloring")
        if not isinstance(trees, list) or not isinstance(coloring, dict):
            raise CertificateFormatError("odd_minor needs 'trees' (array) and 'coloring' (object)")
        out_trees = []
        for n, tr in enumerate(trees):
            if not isinstance(tr, dict) or not isinstance(tr.get("vertices"), list):
                raise CertificateFormatError(f"trees[{n}]: expected an object with a 'vertices' array")
            edges = tr.get("edges", [])
            if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
                raise CertificateFormatError(f"trees[{n}].edges: expected an array of vertex pairs")
            out_trees.append(
                Tree(
                    tuple(_dec(v, f"trees[{n}].vertices") for v in tr["vertices"]),
                    tuple((_dec(u, f"trees[{n}].edges"), _dec(v, f"trees[{n}].edges")) for u, v in edges),
                )
            )
        out_color = {}
        for key, c in coloring.items():
            try:
                raw = json.loads(key)
            except json.JSONDecodeError:
                raise CertificateFormatError(f"coloring: key {key!r} is not a JSON vertex") from None
            if isinstance(c, bool) or not isinstance(c, int):
                raise CertificateFormatError(f"coloring[{key!r}]: color must be an integer")
            out_color[_dec(raw, f"coloring[{key!r}]")] = c
        connectors = None
        if data.get("connectors") is not None:
            if not isinstance(data["connectors"], dict):
                raise CertificateFormatError("connectors: expected an object")
            connectors = {}
            for key, e in data["connectors"].items():
                if not isinstance(e, list) or len(e) != 2:
                    raise CertificateFormatError(f"connectors[{key!r}]: expected a vertex pair")
                connectors[_dec_pair(key, "connectors")] = (
                    _dec(e[0], f"connectors[{key!r}]"),
                    _dec(e[1], f"connectors[{key!r}]"),
                )
        return OddMinorCertificate(out_trees, out_color, connectors, host)
    raise CertificateFormatError(f"kind: expected 'odd_minor' or 'odd_topological', got {kind!r}")


def loads(text: str) -> OddMinorCertificate | OddTopologicalCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return cert_from_json(data)


def verify(cert: OddMinorCertificate | OddTopologicalCertificate, host: Graph | AdjacencyOracle | None = None) -> Verdict:
    """Verify against ``host``, or against the host the certificate describes."""
    if host is None:
        if cert.host is None:
            raise CertificateFormatError("host: certificate does not describe its host")
        host = host_from_spec(cert.host)
    if isinstance(cert, OddTopologicalCertificate):
        return verify_odd_topological(host, cert)
    return verify_odd_minor(host, cert)
