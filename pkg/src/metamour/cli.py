"""Command-line front end.

    metamour construct petersen:5,2 --export dot
    metamour orbit --graph cycle:12 --format json
    metamour iterate --graph tree:5,2 -k 3 --export g6
    metamour verify period3 --max-n 8

Exit status: 0 when the report passes, 1 when a theorem check fails,
2 on usage errors (bad flags, unparsable graph specs).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import verify as V
from .constructions import UnsupportedFieldError
from .dynamics import OrbitBoundExceeded, metamour_iterate, orbit, pseudo_metamour_period
from .graph import diameter, is_connected
from .graphio import (
    GraphFormatError,
    _split_blocks,
    encode_graph6,
    export_dot,
    export_edgelist,
    parse_graph_spec,
    spec_labels,
)

EXPORTS = ("dot", "g6", "edgelist")


class UsageError(Exception):
    pass


def _graph(spec):
    try:
        return parse_graph_spec(spec)
    except (GraphFormatError, UnsupportedFieldError, ValueError) as exc:
        raise UsageError(f"bad graph spec {spec!r}: {exc}") from None


def _export(G, fmt, labels=None):
    if fmt == "dot":
        return export_dot(G, labels)
    if fmt == "g6":
        if G.n > 62:
            raise UsageError("graph6 export supports n <= 62; use --export edgelist")
        return encode_graph6(G) + "\n"
    return export_edgelist(G)


def _report(command, params, data, verdict=V.PASS, counterexamples=(), meta=None):
    return {
        "command": command,
        "params": params,
        "verdict": verdict,
        "counterexamples": list(counterexamples),
        "data": data,
        "meta": meta or {},
    }


def _emit(report, fmt, out):
    if fmt == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return
    out.write(f"{report['command']}: {report['verdict'].upper()}\n")
    for key, value in sorted(report["params"].items()):
        out.write(f"  param {key} = {value}\n")
    for key, value in sorted(report["data"].items()):
        out.write(f"  {key}: {json.dumps(value, sort_keys=True)}\n")
    for c in report["counterexamples"]:
        out.write(f"  counterexample: {json.dumps(c, sort_keys=True)}\n")
    for key, value in sorted(report["meta"].items()):
        out.write(f"  meta {key} = {value}\n")


def cmd_construct(args, out):
    G = _graph(args.spec)
    labels = spec_labels(args.spec) if args.export == "dot" and not args.no_labels else None
    out.write(_export(G, args.export, labels))
    return 0


def cmd_iterate(args, out):
    if args.k < 0:
        raise UsageError("-k must be nonnegative")
    G = metamour_iterate(_graph(args.graph), args.k)
    out.write(_export(G, args.export))
    return 0


def cmd_orbit(args, out):
    G = _graph(args.graph)
    t0 = time.perf_counter()
    try:
        o = orbit(G, args.max_steps)
    except OrbitBoundExceeded as exc:
        report = _report("orbit", {"graph": args.graph}, {"error": str(exc)}, verdict=V.FAIL)
        _emit(report, args.format, out)
        return 1
    data = {
        "n": G.n,
        "edges": G.num_edges,
        "connected": is_connected(G),
        "diameter": str(diameter(G)),
        "preperiod": o.preperiod,
        "period": o.period,
        "metamour_period": o.period if o.preperiod == 0 else None,
        "pseudo_period": pseudo_metamour_period(G, args.max_steps),
    }
    if G.n <= 62:
        data["limit_set"] = [encode_graph6(H) for H in o.limit_set]
    meta = {}
    if args.timing:
        meta["runtime_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    _emit(_report("orbit", {"graph": args.graph}, data, meta=meta), args.format, out)
    return 0


def _suite_call(args):
    name = args.suite
    n = args.max_n
    if name == "period1":
        return V.period1_suite(n or 7)
    if name == "period2":
        return V.period2_suite(n or 8, jobs=args.jobs)
    if name == "period3":
        return V.period3_suite(n or 9, samples=args.samples, include_disconnected=args.include_disconnected,
                               seed=args.seed, jobs=args.jobs)
    if name == "diameter":
        return V.diameter_suite(n or 6, jobs=args.jobs)
    if name == "mu":
        return V.mu_suite(n or 33)
    if name == "dreamcatcher":
        return V.dream_catcher_report()
    if name == "embeddings":
        return V.embedding_suite(max_n=n or 6, seed=args.seed)
    if name == "paley":
        return V.paley_suite()
    if name == "petersen":
        if args.m is not None:
            return V.petersen_suite(args.m)
        return V.petersen_range_suite(5, n or 12)
    if name == "connectivity":
        if args.m is None or args.j is None:
            raise UsageError("verify connectivity needs --m and --j")
        return V.connectivity_check(args.m, args.j)
    if name == "trees":
        if args.h is not None and args.m is not None:
            return V.tree_suite(args.h, args.m)
        return V.trees_range_suite()
    if name == "joinalong":
        blocks = [_graph(b) for b in _split_blocks(args.blocks)]
        if args.cycle < 5 or args.cycle % 2 == 0:
            raise UsageError("--cycle must be odd and at least 5")
        if len(blocks) != args.cycle:
            raise UsageError(f"--blocks gives {len(blocks)} blocks for C{args.cycle}")
        return V.join_along_suite(args.cycle, blocks, seed=args.seed)
    if name == "walks":
        return V.walks_suite(n or 8)
    raise UsageError(f"unknown suite {name!r}")


SUITE_NAMES = ("period1", "period2", "period3", "diameter", "mu", "dreamcatcher", "embeddings",
               "paley", "petersen", "connectivity", "trees", "joinalong", "walks")


def cmd_verify(args, out):
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be positive")
    try:
        rep = _suite_call(args)
    except (ValueError, UnsupportedFieldError) as exc:
        raise UsageError(str(exc)) from None
    d = rep.to_dict(timing=args.timing)
    report = _report("verify", {"suite": args.suite, **rep.params}, d["data"], d["verdict"],
                     d["counterexamples"], d["meta"])
    report["theorem"] = rep.theorem
    _emit(report, args.format, out)
    return 1 if d["verdict"] == V.FAIL else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="metamour", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a graph and export it")
    p.add_argument("spec", help="graph spec, e.g. petersen:5,2 or joinalong:cycle:5;edgeless:2,...")
    p.add_argument("--export", choices=EXPORTS, default="g6")
    p.add_argument("--no-labels", action="store_true", help="omit family labels in DOT output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("iterate", help="export M^k of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--export", choices=EXPORTS, default="g6")
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("orbit", help="preperiod, period and pseudo-period of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--max-steps", type=int, default=None,
                   help="orbit bound (default: $METAMOUR_MAX_ITERS or 100000)")
    p.add_argument("--timing", action="store_true", help="add runtime_ms to meta")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--samples", type=int, default=10_000, help="random samples for period3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--cycle", type=int, default=7, help="cycle length for joinalong")
    p.add_argument("--blocks", default="edgeless:1,edgeless:2,complete:2,edgeless:3,path:3,complete:3,edgeless:1",
                   help="comma-separated block specs for joinalong")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--timing", action="store_true", help="add runtime_ms to meta")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"metamour: error: {exc}", file=sys.stderr)
        return 2


def run(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
