"""Table of (n, k) for which the arc construction applies, with build-and-verify timings.

    python scripts/feasibility_table.py --max-n 40 --build
"""

import argparse
import time
from dataclasses import dataclass
from math import comb

from topochrom.generators import kneser_oracle, schrijver_oracle
from topochrom.kneser_construct import (
    build_odd_topological_kneser,
    build_odd_topological_schrijver,
    feasible,
    good_pattern_count,
    schrijver_feasible,
)
from topochrom.minors import topological_to_minor, verify_odd_minor, verify_odd_topological


@dataclass
class Config:
    max_n: int = 30
    build: bool = False


def smallest_n_per_t(max_n: int) -> dict[int, tuple[int, int]]:
    best: dict[int, tuple[int, int]] = {}
    for n in range(5, max_n + 1):
        for k in range(1, (n - 1) // 2 + 1):
            t = n - 2 * k + 2
            if feasible(n, k) and t not in best:
                best[t] = (n, k)
    return best


def run(cfg: Config) -> None:
    print(f"{'n':>3} {'k':>3} {'t':>3} {'patterns':>9} {'C(t,2)':>7} {'SG':>3}  build")
    for n in range(5, cfg.max_n + 1):
        for k in range(1, (n - 1) // 2 + 1):
            if not feasible(n, k):
                continue
            t = n - 2 * k + 2
            line = f"{n:>3} {k:>3} {t:>3} {good_pattern_count(n, k):>9} {comb(t, 2):>7} {'y' if schrijver_feasible(n, k) else '-':>3}"
            if cfg.build:
                start = time.perf_counter()
                cert = build_odd_topological_kneser(n, k)
                host = kneser_oracle(n, k)
                ok = verify_odd_topological(host, cert) and verify_odd_minor(host, topological_to_minor(cert))
                if schrijver_feasible(n, k):
                    sc = build_odd_topological_schrijver(n, k)
                    ok = ok and verify_odd_topological(schrijver_oracle(n, k), sc)
                line += f"  {'ok' if ok else 'FAIL'} {time.perf_counter() - start:.2f}s"
            print(line)
    print()
    for t, (n, k) in sorted(smallest_n_per_t(cfg.max_n).items()):
        print(f"smallest n with a feasible k for t={t}: KG({n},{k})")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--build", action="store_true", help="also build and verify each certificate")
    a = p.parse_args()
    run(Config(a.max_n, a.build))


if __name__ == "__main__":
    main()
