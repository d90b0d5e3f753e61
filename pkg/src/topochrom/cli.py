"""Command-line entry point: ``topochrom <command> ...``.

Exit codes: 0 success / valid, 1 invalid certificate, infeasible construction
or sweep violation, 2 usage or input-format error. JSON goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__, CERT_FORMAT_VERSION, EDGE_LIST_FORMAT_VERSION
from . import generators as gen
from .boxcomplex import BOX_CAP, ComplexSizeError, betti_gf2, box_complex, box_complex0
from .checks import bound_report, sweep_total_graphs
from .chromatic import SOLVER_CAP, SolverCapError, chromatic_number, independence_number
from .graph import Graph, GraphError, GraphFormatError, read_edge_list, write_edge_list
from .kneser_construct import InfeasibleError, build_odd_topological_kneser, build_odd_topological_schrijver
from .minors import (
    CertificateFormatError,
    HostVertexError,
    InvalidCertificateError,
    OddMinorCertificate,
    dumps,
    graph_from_spec,
    lift_odd_minor_mycielski,
    loads,
    topological_to_minor,
    trivial_complete_minor,
    verify,
)


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _load_graph(path: str) -> Graph:
    return read_edge_list(_read_text(path))


def _base_graph(spec: str) -> tuple[Graph, dict]:
    """``family:p1,p2`` for a named family, otherwise an edge-list path."""
    name, _, params = spec.partition(":")
    if name in gen.STANDARD or name in ("kneser", "schrijver"):
        try:
            values = [int(x) for x in params.split(",") if x]
        except ValueError:
            raise UsageError(f"bad parameters in {spec!r}") from None
        host = {"family": name, "params": values}
        return graph_from_spec(host), host
    g = _load_graph(spec)
    return g, {"family": "explicit", "params": {"n": g.n, "edges": [list(e) for e in g.edges]}}


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {' '.join(missing)}")


def cmd_generate(args: argparse.Namespace) -> int:
    fam = args.family
    if fam in ("kneser", "schrijver"):
        _need(args, "n", "k")
        g = (gen.kneser if fam == "kneser" else gen.schrijver)(args.n, args.k)
    elif fam in ("mycielski", "total"):
        _need(args, "base")
        base, _ = _base_graph(args.base)
        g = gen.mycielskian(base, args.r) if fam == "mycielski" else gen.total_graph(base)
    elif fam == "complete_bipartite":
        _need(args, "n", "m")
        g = gen.complete_bipartite(args.n, args.m)
    elif fam == "petersen":
        g = gen.petersen()
    else:
        _need(args, "n")
        g = gen.standard_graph(fam, args.n)
    _write_text(args.output, write_edge_list(g))
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    _emit(bound_report(_load_graph(args.graph)).to_json())
    return 0


def cmd_betti(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    build = box_complex if args.complex == "b" else box_complex0
    seq = betti_gf2(build(g, args.cap), reduced=args.reduced)
    if seq.empty:
        # reduced homology of the empty complex lives in dimension -1
        print("empty complex" + (" (reduced Betti -1 = 1)" if args.reduced else ""), file=sys.stderr)
        _emit([])
    else:
        _emit(list(seq.trimmed()))
    return 0


def cmd_chromatic(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.total:
        g = gen.total_graph(g)
    res = chromatic_number(g, args.cap)
    out: dict = {"chi": res.chi, "witness": list(res.witness)}
    if args.alpha:
        out["alpha"] = independence_number(g, args.cap)
    _emit(out)
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    build = build_odd_topological_schrijver if args.schrijver else build_odd_topological_kneser
    try:
        cert = build(args.n, args.k)
    except InfeasibleError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.minor:
        cert = topological_to_minor(cert)
    _write_text(args.output, dumps(cert))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cert = loads(_read_text(args.cert))
    try:
        verdict = verify(cert)
    except HostVertexError as exc:
        print(f"host_vertex: {exc}", file=sys.stderr)
        return 1
    kind = "odd_minor" if isinstance(cert, OddMinorCertificate) else "odd_topological"
    if not verdict:
        print(f"invalid {kind}: {verdict}", file=sys.stderr)
        _emit({"valid": False, "kind": kind, "clause": verdict.clause})
        return 1
    _emit({"valid": True, "kind": kind, "t": cert.t})
    return 0


def cmd_lift(args: argparse.Namespace) -> int:
    if args.start_complete is not None:
        cert = trivial_complete_minor(args.start_complete)
    elif args.cert is not None:
        cert = loads(_read_text(args.cert))
    else:
        raise UsageError("lift needs a certificate file or --start-complete T")
    if not isinstance(cert, OddMinorCertificate):
        raise UsageError("lift takes an odd_minor certificate; convert topological ones with construct-odd --minor")
    if cert.host is None:
        raise CertificateFormatError("host: certificate does not describe its host")
    g = graph_from_spec(cert.host)
    try:
        lifted = lift_odd_minor_mycielski(g, cert, args.r)
    except InvalidCertificateError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_text(args.output, dumps(lifted))
    return 0


def cmd_total_check(args: argparse.Namespace) -> int:
    result = sweep_total_graphs(args.max_n, jobs=args.jobs)
    _emit(result.to_json())
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topochrom", description=__doc__.splitlines()[0])
    p.add_argument(
        "--version",
        action="version",
        version=f"topochrom {__version__} (edge-list format {EDGE_LIST_FORMAT_VERSION}, "
        f"certificate format {CERT_FORMAT_VERSION})",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps (default 1)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a graph in edge-list format")
    g.add_argument(
        "--family",
        required=True,
        choices=["kneser", "schrijver", "mycielski", "total", "complete", "cycle", "path", "complete_bipartite", "petersen"],
    )
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int, help="second side for complete_bipartite")
    g.add_argument("--r", type=int, default=2, help="Mycielskian levels (default 2)")
    g.add_argument("--base", help="base graph: edge-list path, '-', or family:params such as cycle:5")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bound", help="bound report as JSON")
    b.add_argument("graph")
    b.set_defaults(func=cmd_bound)

    h = sub.add_parser("betti", help="mod-2 Betti numbers of a box complex")
    h.add_argument("graph")
    h.add_argument("--complex", choices=["b", "b0"], default="b")
    h.add_argument("--reduced", action="store_true")
    h.add_argument("--cap", type=int, default=BOX_CAP)
    h.set_defaults(func=cmd_betti)

    c = sub.add_parser("chromatic", help="exact chromatic number with witness")
    c.add_argument("graph")
    c.add_argument("--total", action="store_true", help="use the total graph")
    c.add_argument("--alpha", action="store_true", help="also report the independence number")
    c.add_argument("--cap", type=int, default=SOLVER_CAP)
    c.set_defaults(func=cmd_chromatic)

    k = sub.add_parser("construct-odd", help="odd topological K_t in KG(n,k) or SG(n,k)")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--schrijver", action="store_true")
    k.add_argument("--minor", action="store_true", help="emit the derived odd K_t minor instead")
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a certificate against the host it names")
    v.add_argument("cert", help="certificate path or '-'")
    v.set_defaults(func=cmd_verify)

    li = sub.add_parser("lift", help="lift an odd K_t minor to the Mycielskian")
    li.add_argument("cert", nargs="?")
    li.add_argument("--r", type=int, default=2)
    li.add_argument("--start-complete", type=int, metavar="T", help="start from the trivial odd K_T minor of K_T")
    li.add_argument("-o", "--output")
    li.set_defaults(func=cmd_lift)

    tc = sub.add_parser("total-check", help="sweep small graphs for the total-graph checks")
    tc.add_argument("--max-n", type=int, default=6)
    tc.set_defaults(func=cmd_total_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CertificateFormatError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, GraphError, ComplexSizeError, SolverCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
