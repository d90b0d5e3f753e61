"""Exhaustive total-graph sweep plus a random sample of larger graphs.

Checks that T(G) has no K_(2,Δ+1) when Δ >= 4 and that χ(T(G)) <= Δ + 2.

    python scripts/sweep_total_graphs.py --max-n 7 --jobs 4 --random 500
"""

import argparse
import json
import random
import time
from dataclasses import dataclass

from topochrom.census import random_graph
from topochrom.checks import sweep_total_graphs
from topochrom.graph import max_degree
from topochrom.subgraphs import total_graph_obstruction_check


@dataclass
class Config:
    max_n: int = 6
    jobs: int = 1
    random: int = 200
    random_max_n: int = 12
    seed: int = 0


def run(cfg: Config) -> dict:
    start = time.perf_counter()
    out = sweep_total_graphs(cfg.max_n, jobs=cfg.jobs).to_json()
    rng = random.Random(cfg.seed)
    tried = bad = 0
    while tried < cfg.random:
        g = random_graph(rng.randint(5, cfg.random_max_n), rng.uniform(0.2, 0.9), rng)
        if max_degree(g) < 4:
            continue
        tried += 1
        bad += not total_graph_obstruction_check(g).free
    out["random"] = {"graphs": tried, "max_n": cfg.random_max_n, "obstruction_violations": bad}
    out["seconds"] = round(time.perf_counter() - start, 2)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    a = p.parse_args()
    print(json.dumps(run(Config(**vars(a))), indent=2))


if __name__ == "__main__":
    main()
