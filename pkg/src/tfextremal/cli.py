"""Command-line front end.

Exit codes: 0 success, 1 a check failed or disagreed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import formats
from .constructions import WitnessReport, assemble_general_witness, assemble_triangle_free_witness
from .formulas import (
    MAX_PARAM,
    ExtremalValue,
    Status,
    f_gen,
    f_triangle,
    h_triangle,
    in_proven_domain,
    resolve_Zd,
)
from .graph import verify_membership
from .oracle.enumerate import HARD_CAP, BudgetExceeded, default_budget
from .oracle import search

CONJ = "[conjectured]"


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= v <= MAX_PARAM:
        raise argparse.ArgumentTypeError(f"must lie in [1, {MAX_PARAM}]")
    return v


def _budget(text: str) -> int:
    v = _positive(text)
    if v > HARD_CAP:
        raise argparse.ArgumentTypeError(f"vertex budget is capped at {HARD_CAP}")
    return v


def _marker(status: Status) -> str:
    return f" {CONJ}" if status is Status.CONJECTURED else ""


def _value_text(v: ExtremalValue) -> str:
    return str(v.value) if not v.is_interval else f"[{v.value}, {v.upper}]"


def _h_or_none(d: int, m: int) -> int | None:
    return h_triangle(d, m) if in_proven_domain(d, m) else None


# -- compute ---------------------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    d, m = args.d, args.m
    v = f_triangle(d, m, args.assume_conjectures)
    g = f_gen(d, m)
    h = _h_or_none(d, m)
    if args.format == "json":
        print(json.dumps({
            "d": d,
            "m": m,
            "value": v.value,
            "upper": v.upper,
            "status": str(v.status),
            "case": v.case,
            "k": v.k,
            "r": v.r,
            "f_gen": g.value,
            "h": h,
            "conjectured": v.status is Status.CONJECTURED,
        }))
        return 0
    if args.format != "table":
        raise UsageError("compute supports --format table or json")
    z = resolve_Zd(d, args.assume_conjectures) if d >= 2 else None
    print(f"f_triangle({d}, {m}) = {_value_text(v)}{_marker(v.status)}")
    print(f"status: {v.status}")
    print(f"case: {v.case}")
    if z is not None:
        print(f"Z({d}): {z}{_marker(Status.CONJECTURED) if z.kind == 'conjectured' else ''}")
    if v.k is not None:
        print(f"decomposition: m = {v.k}*Z + {v.r}" if d >= 2 and d <= m else f"decomposition: k={v.k}, r={v.r}")
    print(f"f_gen({d}, {m}) = {g.value}")
    print(f"h({d}, {m}) = {h if h is not None else 'n/a (outside proven domain)'}")
    return 0


# -- witness -----------------------------------------------------------------


def _emit_graph(report: WitnessReport, fmt: str, out) -> None:
    if fmt == "graph6":
        out.write(formats.graph6_encode(report.graph) + "\n")
    elif fmt == "dot":
        out.write(formats.to_dot(report.graph, name=f"W_{report.d}_{report.m}"))
    elif fmt == "json":
        obj = report.to_json_dict()
        obj["graph"] = formats.to_json_dict(report.graph)
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(f"witness for d={report.d}, m={report.m}: {report.claimed_edges} edges{_marker(report.status)}\n")
        out.write(f"status: {report.status}\n")
        out.write(f"case: {report.case_tag}\n")
        out.write(f"parts: {', '.join(report.parts)}\n")
        out.write(f"graph6: {formats.graph6_encode(report.graph)}\n")


def cmd_witness(args: argparse.Namespace) -> int:
    d, m = args.d, args.m
    if args.general:
        report = assemble_general_witness(d, m)
        rep = verify_membership(report.graph, d, m)
        ok = rep.degree_ok and rep.matching_ok and rep.num_edges == report.claimed_edges
    else:
        report = assemble_triangle_free_witness(d, m, args.assume_conjectures)
        rep = verify_membership(report.graph, d, m)
        ok = rep.passed and rep.num_edges == report.claimed_edges
    if not ok:
        print(f"witness failed self-verification: {', '.join(rep.failures())}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            _emit_graph(report, args.format, fh)
        if args.format != "table":
            print(f"wrote {args.output}: {report.claimed_edges} edges, {report.status}{_marker(report.status)}")
    else:
        _emit_graph(report, args.format, sys.stdout)
    return 0


# -- verify ------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    try:
        g = formats.parse_graph_text(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse {args.path}: {exc}") from None
    rep = verify_membership(g, args.d, args.m)
    if args.format == "json":
        print(json.dumps({
            "d": rep.d,
            "m": rep.m,
            "edges": rep.num_edges,
            "max_degree": rep.max_degree,
            "matching_number": rep.matching_number,
            "triangle_free": rep.triangle_free,
            "degree_ok": rep.degree_ok,
            "matching_ok": rep.matching_ok,
            "counting_bound_ok": rep.vizing_ok,
            "passed": rep.passed,
        }))
    else:
        print(f"vertices: {g.n}")
        print(f"edges: {rep.num_edges}")
        print(f"triangle-free: {rep.triangle_free}")
        print(f"max degree: {rep.max_degree} (<= {rep.d}: {rep.degree_ok})")
        print(f"matching number: {rep.matching_number} (<= {rep.m}: {rep.matching_ok})")
        print(f"edges <= (d+1)m = {(rep.d + 1) * rep.m}: {rep.vizing_ok}")
        print("PASS" if rep.passed else "FAIL: " + "; ".join(rep.failures()))
    return 0 if rep.passed else 1


# -- table -------------------------------------------------------------------


def _cell(d: int, m: int, assume: bool) -> dict:
    v = f_triangle(d, m, assume)
    return {
        "d": d,
        "m": m,
        "f_triangle": v.value,
        "f_triangle_upper": v.upper,
        "status": str(v.status),
        "f_gen": f_gen(d, m).value,
        "h": _h_or_none(d, m),
    }


def cmd_table(args: argparse.Namespace) -> int:
    cells = [[_cell(d, m, args.assume_conjectures) for m in range(1, args.m_max + 1)] for d in range(1, args.d_max + 1)]
    if args.format == "json":
        print(json.dumps([c for row in cells for c in row]))
        return 0
    if args.format != "table":
        raise UsageError("table supports --format table or json")
    flag = {"ProvenOptimal": "", "ConjecturedOptimal": "*", "Unknown": "?"}

    def text(c: dict) -> str:
        f = str(c["f_triangle"]) if c["f_triangle"] == c["f_triangle_upper"] else f"{c['f_triangle']}-{c['f_triangle_upper']}"
        h = "-" if c["h"] is None else str(c["h"])
        return f"{f}{flag[c['status']]}/{c['f_gen']}/{h}"

    body = [[text(c) for c in row] for row in cells]
    width = max(len(s) for row in body for s in row)
    print("cells: f_triangle/f_gen/h")
    print("d\\m " + " ".join(f"{m:>{width}}" for m in range(1, args.m_max + 1)))
    for d, row in enumerate(body, start=1):
        print(f"{d:>3} " + " ".join(f"{s:>{width}}" for s in row))
    print(f"* {CONJ}   ? unknown (value range shown)   - h outside proven domain")
    return 0


# -- oracle ------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    budget = args.budget_vertices
    if budget is None:
        budget = HARD_CAP if args.slow else default_budget()
    if args.zd:
        if args.d < 2:
            raise UsageError("--zd needs --d >= 2")
        n_max = args.n_max if args.n_max is not None else (budget - 1) // 2
        res = search.search_Zd(args.d, n_max, budget=budget)
        closed = resolve_Zd(args.d)
        agree = res.lo <= closed.hi and closed.lo <= res.hi
        if args.format == "json":
            print(json.dumps({"d": args.d, "kind": res.kind, "lo": res.lo, "hi": res.hi,
                              "provenance": res.provenance, "closed_form": str(closed), "agree": agree}))
        else:
            print(f"Z({args.d}) search: {res} ({res.provenance})")
            print(f"closed form: {closed}; {'agrees' if agree else 'DISAGREES'}")
        if args.slow and res.kind == "exact":
            n = search.count_witnesses(args.d, res.lo, budget=budget)
            print(f"witness classes at nu={res.lo}: {n}")
        return 0 if agree else 1

    if args.m is None:
        raise UsageError("oracle needs --m (or --zd)")
    rec = search.brute_force_f(args.d, args.m, vertex_cap=args.vertex_cap, budget=budget)
    v = f_triangle(args.d, args.m)
    proven = in_proven_domain(args.d, args.m) is True
    agree = v.value <= rec.best_edges <= v.upper if rec.exhaustive else rec.best_edges <= v.upper
    if args.format == "json":
        obj = rec.to_json_dict()
        obj.update(closed_form=v.value, agree=agree)
        print(json.dumps(obj))
    elif args.format == "graph6":
        print(formats.graph6_encode(rec.witness))
    else:
        kind = "exhaustive" if rec.exhaustive else f"partial, <= {rec.vertex_bound_used} vertices"
        print(f"brute force f_triangle({args.d}, {args.m}) = {rec.best_edges} ({kind})")
        print(f"closed form: {_value_text(v)} ({v.status}); {'agrees' if agree else 'DISAGREES'}")
        print(f"witness graph6: {formats.graph6_encode(rec.witness)}")
    return 1 if (proven and not agree) else 0


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tfextremal",
        description="Maximum size of triangle-free graphs with bounded degree and matching number.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats_allowed=("table", "json")):
        sp.add_argument("--assume-conjectures", action="store_true",
                        help="use conjectured values where nothing is proven")
        sp.add_argument("--format", choices=formats_allowed, default="table")

    c = sub.add_parser("compute", help="closed-form value for (d, m)")
    c.add_argument("--d", type=_positive, required=True)
    c.add_argument("--m", type=_positive, required=True)
    common(c)
    c.set_defaults(func=cmd_compute)

    w = sub.add_parser("witness", help="build and self-check an extremal witness")
    w.add_argument("--d", type=_positive, required=True)
    w.add_argument("--m", type=_positive, required=True)
    w.add_argument("--general", action="store_true", help="drop the triangle-free condition")
    w.add_argument("--output", "-o", help="write the graph to this file")
    common(w, ("table", "json", "graph6", "dot"))
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify", help="check a graph6 or JSON graph against (d, m)")
    v.add_argument("path")
    v.add_argument("--d", type=_positive, required=True)
    v.add_argument("--m", type=_positive, required=True)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="f_triangle / f_gen / h over a grid")
    t.add_argument("--d-max", type=_positive, default=10)
    t.add_argument("--m-max", type=_positive, default=12)
    common(t)
    t.set_defaults(func=cmd_table)

    o = sub.add_parser("oracle", help="exhaustive search, compared against the closed form")
    o.add_argument("--d", type=_positive, required=True)
    o.add_argument("--m", type=_positive)
    o.add_argument("--zd", action="store_true", help="search for Z(d) instead of f")
    o.add_argument("--n-max", type=_positive, help="largest matching number tried with --zd")
    o.add_argument("--vertex-cap", type=_positive, help="stop brute force at this many vertices")
    o.add_argument("--budget-vertices", type=_budget, help=f"enumeration budget (<= {HARD_CAP})")
    o.add_argument("--slow", action="store_true",
                   help="raise the default budget to the hard cap and count witnesses with --zd")
    o.add_argument("--format", choices=("table", "json", "graph6"), default="table")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
