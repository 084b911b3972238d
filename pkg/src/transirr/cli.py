"""Command-line front end.

Exit codes: 0 clean, 1 error-level verification mismatch, 2 bad input,
3 only discrepancy findings (a published claim disagrees with the oracle).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import closed_form as cf
from .classify import classify_family
from .closed_form import ParameterError
from .dsl import parse_family, render
from .enumeration import EnumerationError, census, enumerate_free_trees, enumerate_starlike, starlike_arms
from .families import (
    BiStarlikeBSStar,
    BrokenUnitArithmetic,
    FamilyError,
    LineOf,
    Starlike,
    TriangleFiveArm,
    TriangleThreeArm,
    build,
)
from .graph_core import GraphError, format_edge_list, parse_edge_list, transmission_profile
from .verify import THEOREMS, VerifyError, parse_range, verify

INPUT_ERRORS = (FamilyError, GraphError, ParameterError, VerifyError, EnumerationError)


def _emit(obj, fmt: str) -> None:
    if fmt == "plain":
        for key, value in obj.items():
            if isinstance(value, (list, dict)):
                value = json.dumps(value)
            print(f"{key}: {value}", flush=True)
    else:
        print(json.dumps(obj), flush=True)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_compute(args) -> int:
    if args.edge_list:
        g = parse_edge_list(_read_text(args.edge_list))
    elif args.expr:
        g = build(parse_family(args.expr))
    else:
        raise FamilyError("compute needs a family expression or --edge-list")
    _emit({"m": g.m, **transmission_profile(g).to_dict()}, args.format)
    return 0


def cmd_classify(args) -> int:
    spec = parse_family(args.expr)
    _emit({"family": render(spec), **classify_family(spec).to_dict()}, args.format)
    return 0


def cmd_render(args) -> int:
    sys.stdout.write(format_edge_list(build(parse_family(args.expr))))
    sys.stdout.flush()
    return 0


def _sets_for(spec, prefer: str | None):
    if isinstance(spec, Starlike):
        arms = spec.arms
        unit = all(y - x == 1 for x, y in zip(arms, arms[1:]))
        head = arms[:-1]
        extremal = (
            all(y - x == 1 for x, y in zip(head, head[1:]))
            and arms[-1] == (2 * head[0] + len(head) - 1) * len(head) // 2
        )
        if prefer in (None, "bp") and unit:
            return cf.bp_sets(arms[0], len(arms) - 1)
        if prefer in (None, "dp") and extremal:
            return cf.dp_sets(head[0], len(head) - 1)
    if isinstance(spec, BrokenUnitArithmetic) and spec.shape_params():
        return cf.broken_sets(*spec.shape_params())
    if isinstance(spec, BiStarlikeBSStar):
        return cf.bs_star_sets(spec.a, spec.k)
    if isinstance(spec, TriangleFiveArm) and spec.triangle_param():
        return cf.triangle_sets(spec.triangle_param())
    if isinstance(spec, TriangleThreeArm):
        lo, mid, hi = spec.arms
        if mid == lo + 1 and hi == lo + 2:
            return cf.line_graph_sets(lo + 1)
    if isinstance(spec, LineOf) and isinstance(spec.inner, Starlike):
        arms = spec.inner.arms
        if len(arms) == 3 and arms[1] == arms[0] + 1 and arms[2] == arms[0] + 2:
            return cf.line_graph_sets(arms[0])
    raise ParameterError(f"no closed-form layer sets for {render(spec)}")


def cmd_dump_sets(args) -> int:
    spec = parse_family(args.expr)
    print(json.dumps(_sets_for(spec, args.sets).to_json()), flush=True)
    return 0


def cmd_search(args) -> int:
    n = args.order
    if args.cls == "starlike":
        count = irregular = 0
        for spec in enumerate_starlike(n, args.arms):
            prof = transmission_profile(build(spec))
            count += 1
            irregular += prof.is_irregular
            if args.ti_only and not prof.is_irregular:
                continue
            _emit({"family": render(spec), "complexity": prof.complexity, "is_irregular": prof.is_irregular}, args.format)
        _emit({"summary": {"order": n, "class": "starlike", "count": count, "irregular": irregular}}, args.format)
        return 0

    if args.ti_only:
        result = census(n)
        for edges, label in zip(result.witnesses, result.witness_labels):
            _emit({"edges": [list(e) for e in edges], "starlike": label, "is_irregular": True}, args.format)
        _emit({"summary": result.to_dict() | {"witnesses": len(result.witnesses)}}, args.format)
        return 0
    for index, tree in enumerate(enumerate_free_trees(n)):
        prof = transmission_profile(tree)
        arms = starlike_arms(tree)
        _emit(
            {
                "index": index,
                "edges": [list(e) for e in tree.edges()],
                "starlike": "T(" + ",".join(map(str, arms)) + ")" if arms else None,
                "complexity": prof.complexity,
                "is_irregular": prof.is_irregular,
            },
            args.format,
        )
    summary = census(n).to_dict()
    summary["witnesses"] = len(summary["witnesses"])
    _emit({"summary": summary}, args.format)
    return 0


def cmd_verify(args) -> int:
    ranges = dict(parse_range(r) for r in args.range or [])
    report = verify(args.theorem, ranges, jobs=args.jobs, out=args.out)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["theorem", "params", "verdict", "oracle_irregular", "outcome", "category"])
        for rec in report.records:
            writer.writerow(
                [rec["theorem"], json.dumps(rec["params"], sort_keys=True), rec["verdict"],
                 rec["oracle_irregular"], rec["outcome"], rec["category"] or ""]
            )
        sys.stdout.flush()
    else:
        summary = report.summary()
        summary["elapsed_ms"] = int(report.elapsed * 1000)
        del summary["elapsed"]
        _emit(summary, args.format)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(prog="transirr", description=__doc__, parents=[])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="transmission profile of a graph")
    p.add_argument("expr", nargs="?")
    p.add_argument("--edge-list", metavar="FILE", help="edge-list file, '-' for stdin")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", parents=[common], help="theorem-level verdict for a family")
    p.add_argument("expr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("render", parents=[common], help="edge list of a family instance")
    p.add_argument("expr")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("dump-sets", parents=[common], help="closed-form layer sets as JSON")
    p.add_argument("expr")
    p.add_argument("--sets", choices=["bp", "dp"], help="interpretation for starlike trees that fit both")
    p.set_defaults(func=cmd_dump_sets)

    p = sub.add_parser("search", parents=[common], help="enumerate trees of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=["trees", "starlike"], default="trees")
    p.add_argument("--arms", type=int, help="arm count for --class starlike")
    p.add_argument("--ti-only", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="sweep a theorem against the oracle")
    p.add_argument("theorem", choices=list(THEOREMS))
    p.add_argument("--range", action="append", metavar="KEY=LO..HI")
    p.add_argument("--out", metavar="REPORT.jsonl")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
