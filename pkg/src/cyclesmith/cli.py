"""Command-line surface.

Exit codes: 0 verified success, 1 verification failure, 2 input error,
3 method precondition failure.  Machine output (certificates, reports) on
stdout as JSON; diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cover import cover_cycles_edges, even_cycle_cover
from .decomposer import (
    decompose_auto,
    decompose_clawfree,
    decompose_greedy,
    decompose_maxdeg4,
)
from .errors import (
    CyclesmithError,
    DegreeTooHigh,
    InvalidParams,
    LimitExceeded,
    MalformedEdgeList,
    MalformedGraph6,
    NotClawFree,
    NotEven,
    NotRegularEven,
    PreconditionError,
    TooManyOddVertices,
    UnsupportedFormat,
)
from . import generators
from .corpus import CHECKS, run_corpus
from .graph import write_dot, write_edge_list, write_graph6
from .limits import default_limits
from .oracle import exact_ce, exact_gce, exact_re
from .regular_decomp import even_to_two_regular
from .verify import (
    Cover,
    PartKind,
    certificate_from_json,
    certificate_to_json,
    graph_from_text,
    verify_cover,
    verify_decomposition,
)

_INPUT_ERRORS = (MalformedGraph6, MalformedEdgeList, UnsupportedFormat,
                 InvalidParams, OSError, ValueError, KeyError)
_PRECONDITION_ERRORS = (NotEven, NotClawFree, DegreeTooHigh, NotRegularEven,
                        TooManyOddVertices, PreconditionError, LimitExceeded)

_DECOMPOSE_KINDS = {
    "maxdeg4": {PartKind.CYCLE, PartKind.SINGLE_EDGE},
    "greedy": {PartKind.CYCLE, PartKind.SINGLE_EDGE},
    "clawfree": {PartKind.TWO_REGULAR, PartKind.SINGLE_EDGE},
    "even2reg": {PartKind.TWO_REGULAR},
    "auto": {PartKind.CYCLE, PartKind.SINGLE_EDGE, PartKind.TWO_REGULAR},
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str):
    return graph_from_text(_read_text(path))


def _emit_certificate(g, cert, fmt: str):
    if fmt == "dot":
        print(write_dot(g, [sorted(p.edges) for p in cert.parts]), end="")
    else:
        print(json.dumps(certificate_to_json(g, cert), indent=2))


def cmd_decompose(args) -> int:
    g = _load_graph(args.input)
    limits = default_limits()
    method = args.method
    if method == "auto":
        cert = decompose_auto(g, limits)
    elif method == "maxdeg4":
        cert = decompose_maxdeg4(g, limits)
    elif method == "clawfree":
        cert = decompose_clawfree(g, limits)
    elif method == "even2reg":
        cert = even_to_two_regular(g)
    else:
        cert = decompose_greedy(g, limits)
    verdict = verify_decomposition(g, cert, _DECOMPOSE_KINDS[method])
    _emit_certificate(g, cert, args.format)
    if not verdict.ok:
        for v in verdict.violations:
            print(f"violation: part {v.part_index}: {v.rule}: {v.detail}",
                  file=sys.stderr)
        return 1
    return 0


def cmd_cover(args) -> int:
    g = _load_graph(args.input)
    limits = default_limits()
    if args.method == "even-cycles":
        cert = even_cycle_cover(g, limits)
        kinds = {PartKind.CYCLE}
    else:
        cert = cover_cycles_edges(g, limits)
        kinds = {PartKind.CYCLE, PartKind.SINGLE_EDGE}
    cert.meta.pop("trace", None)
    verdict = verify_cover(g, cert, kinds)
    _emit_certificate(g, cert, args.format)
    return 0 if verdict.ok else 1


def cmd_verify(args) -> int:
    obj = json.loads(_read_text(args.input))
    g, cert = certificate_from_json(obj)
    if isinstance(cert, Cover):
        verdict = verify_cover(g, cert)
    else:
        verdict = verify_decomposition(g, cert)
    print(json.dumps({
        "ok": verdict.ok,
        "violations": [
            {"part": v.part_index, "rule": v.rule, "detail": v.detail}
            for v in verdict.violations
        ],
    }, indent=2))
    return 0 if verdict.ok else 1


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    limits = default_limits()
    fn = {"ce": exact_ce, "re": exact_re, "gce": exact_gce}[args.metric]
    res = fn(g, limits)
    print(json.dumps({
        "metric": res.metric,
        "value": res.value,
        "nodes": res.nodes,
        "elapsed": res.elapsed,
        "cycles_enumerated": res.cycle_count,
        "witness": certificate_to_json(g, res.witness),
    }, indent=2))
    return 0


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "path":
        g = generators.path(args.n)
    elif fam == "cycle":
        g = generators.cycle(args.n)
    elif fam == "complete":
        g = generators.complete(args.n)
    elif fam == "petersen":
        g = generators.petersen()
    elif fam == "k4trees":
        sizes = tuple(int(x) for x in args.sizes.split(","))
        g = generators.k4_with_trees(sizes, args.seed)
    else:  # random-regular
        if args.n is None or args.k is None:
            raise InvalidParams("random-regular needs --n and --k")
        g = generators.random_regular(args.n, args.k, args.seed)
    if args.format == "edge-list" or g.n > 62:
        print(write_edge_list(g), end="")
    else:
        print(write_graph6(g))
    return 0


def cmd_corpus(args) -> int:
    def progress(report):
        print(f"  ... {report.total} graphs checked", file=sys.stderr)

    report = run_corpus(
        args.check,
        args.max_n,
        filter_name=args.filter,
        limits=default_limits(),
        keep_records=args.records,
        samples=args.samples,
        seed=args.seed,
        progress=progress if args.verbose else None,
    )
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclesmith",
        description="Decompose and cover graphs by cycles, edges, even and "
                    "2-regular subgraphs, with verifiable certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose a graph, print the certificate")
    d.add_argument("input", help="graph file (graph6 or edge list), '-' for stdin")
    d.add_argument("--method", default="auto",
                   choices=["auto", "maxdeg4", "clawfree", "even2reg", "greedy"])
    d.add_argument("--format", default="json", choices=["json", "dot"])
    d.set_defaults(fn=cmd_decompose)

    c = sub.add_parser("cover", help="cover a graph by cycles and edges")
    c.add_argument("input")
    c.add_argument("--method", default="cycles-edges",
                   choices=["cycles-edges", "even-cycles"])
    c.add_argument("--format", default="json", choices=["json", "dot"])
    c.set_defaults(fn=cmd_cover)

    v = sub.add_parser("verify", help="verify a certificate JSON document")
    v.add_argument("input", help="certificate file, '-' for stdin")
    v.set_defaults(fn=cmd_verify)

    o = sub.add_parser("oracle", help="exact minimum part counts (small graphs)")
    o.add_argument("input")
    o.add_argument("--metric", default="ce", choices=["ce", "re", "gce"])
    o.set_defaults(fn=cmd_oracle)

    g = sub.add_parser("gen", help="generate a named graph")
    g.add_argument("family", choices=["path", "cycle", "complete", "petersen",
                                      "k4trees", "random-regular"])
    g.add_argument("--n", type=int, default=None)
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--sizes", default="0,0,0,0",
                   help="k4trees: comma-separated tree sizes, e.g. 2,0,1,0")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", default="graph6", choices=["graph6", "edge-list"])
    g.set_defaults(fn=cmd_gen)

    r = sub.add_parser("corpus", help="exhaustive theorem check over all labeled "
                                      "graphs passing a filter")
    r.add_argument("--max-n", type=int, required=True)
    r.add_argument("--check", required=True, choices=sorted(CHECKS))
    r.add_argument("--filter", default=None,
                   help="override the check's default filter")
    r.add_argument("--records", action="store_true",
                   help="include one record per graph in the report "
                        "(memory-heavy beyond n=5)")
    r.add_argument("--samples", type=int, default=1000,
                   help="graphs per order in random mode (beyond the "
                        "exhaustive threshold)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--verbose", action="store_true")
    r.set_defaults(fn=cmd_corpus)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _PRECONDITION_ERRORS as exc:
        if isinstance(exc, NotClawFree):
            print(json.dumps({"error": "not-claw-free",
                              "center": exc.center,
                              "leaves": list(exc.leaves)}), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 3
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CyclesmithError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
