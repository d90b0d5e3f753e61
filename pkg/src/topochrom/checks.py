"""Bound reports and exhaustive/random sweeps combining the other modules."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .boxcomplex import BOX_CAP, betti_gf2, box_complex
from .census import nonisomorphic_graphs
from .chromatic import SOLVER_CAP, chromatic_number
from .generators import total_graph
from .graph import Graph, make_graph, max_degree
from .subgraphs import BoundReport, bipartite_bound, total_graph_obstruction_check


def bound_report(g: Graph, solver_cap: int = SOLVER_CAP, box_cap: int = BOX_CAP) -> BoundReport:
    """Bipartite bound always; exact χ and Betti numbers of B(G) when within caps."""
    report = BoundReport(bipartite_bound(g))
    if g.n <= solver_cap:
        report.chromatic = chromatic_number(g, solver_cap).chi
    if g.n <= box_cap:
        report.betti = list(betti_gf2(box_complex(g, box_cap)).trimmed())
    return report


@dataclass
class TotalSweepResult:
    max_n: int
    graphs: int = 0
    delta_at_least_4: int = 0
    obstruction_violations: list[Graph] = field(default_factory=list)
    total_coloring_violations: list[Graph] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.obstruction_violations and not self.total_coloring_violations

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "graphs": self.graphs,
            "delta_ge_4": self.delta_at_least_4,
            "obstruction_violations": len(self.obstruction_violations),
            "total_coloring_violations": len(self.total_coloring_violations),
        }


def _check_one(edges_n: tuple[int, tuple]) -> tuple[int, bool, bool]:
    n, edges = edges_n
    g = make_graph(n, edges)
    delta = max_degree(g)
    obstructed = delta >= 4 and not total_graph_obstruction_check(g).free
    over = chromatic_number(total_graph(g)).chi > delta + 2
    return delta, obstructed, over


def sweep_total_graphs(max_n: int, jobs: int = 1) -> TotalSweepResult:
    """Every graph on ``1..max_n`` vertices up to isomorphism: the K_(2,Δ+1)
    obstruction for Δ >= 4 and χ(T(G)) <= Δ + 2."""
    graphs = [g for n in range(1, max_n + 1) for g in nonisomorphic_graphs(n)]
    payload = [(g.n, g.edges) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_check_one, payload, chunksize=16))
    else:
        results = [_check_one(p) for p in payload]
    out = TotalSweepResult(max_n, graphs=len(graphs))
    for g, (delta, obstructed, over) in zip(graphs, results):
        out.delta_at_least_4 += delta >= 4
        if obstructed:
            out.obstruction_violations.append(g)
        if over:
            out.total_coloring_violations.append(g)
    return out
