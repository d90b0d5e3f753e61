"""Iterate the Mycielski lift from K_2 and report certificate size, verification and χ.

    python scripts/mycielski_chain.py --steps 3 --r 2
"""

import argparse
from dataclasses import dataclass

from topochrom.chromatic import chromatic_number
from topochrom.generators import complete
from topochrom.minors import graph_from_spec, lift_odd_minor_mycielski, trivial_complete_minor, verify_odd_minor


@dataclass
class Config:
    steps: int = 3
    r: int = 2


def run(cfg: Config) -> None:
    g, cert = complete(2), trivial_complete_minor(2)
    for step in range(1, cfg.steps + 1):
        cert = lift_odd_minor_mycielski(g, cert, cfg.r)
        g = graph_from_spec(cert.host)
        ok = bool(verify_odd_minor(g, cert))
        chi = chromatic_number(g).chi if g.n <= 25 else "-"
        print(f"step {step}: |V|={g.n} |E|={g.m} odd K_{cert.t} minor {'verified' if ok else 'INVALID'}, chi={chi}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--steps", type=int, default=Config.steps)
    p.add_argument("--r", type=int, default=Config.r)
    a = p.parse_args()
    run(Config(a.steps, a.r))


if __name__ == "__main__":
    main()
