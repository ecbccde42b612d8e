"""Command-line surface: analyze, oracle, colon, verify.

Input graphs come from edge-list files (two whitespace-separated labels per
line, '#' comments, ``vertex <label>`` for isolated vertices).  Output is
deterministic: identical inputs give byte-identical reports, and --json
emits machine-readable documents with a fixed key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import FAMILIES, GraphFamilySpec
from .formulas import UnsupportedGraphError, analyze_graph
from .graphs import GraphError, parse_edge_list
from .monomials import (
    colon,
    colon_by_even_connection,
    edge_ideal,
    ideal_power,
    monomial_of_edges,
)
from .oracle import (
    ResourceLimitError,
    oracle_report,
    worker_count,
)
from .verify import run_verification

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_UNSUPPORTED = 2
EXIT_COLON_MISMATCH = 3


def _load_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def cmd_analyze(args):
    try:
        g = _load_graph(args.file)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        report = analyze_graph(g, max_power=args.max_power)
    except UnsupportedGraphError as exc:
        print(f"error: {exc}; run `regpow oracle {args.file}` instead", file=sys.stderr)
        return EXIT_UNSUPPORTED
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def cmd_oracle(args):
    try:
        g = _load_graph(args.file)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ideal = edge_ideal(g)
    if args.power > 1:
        ideal = ideal_power(ideal, args.power)
    max_vars = None if not args.heavy else 1 << 30
    if args.max_vars is not None:
        max_vars = args.max_vars
    try:
        res = oracle_report(ideal, max_vars=max_vars, threads=worker_count())
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"reg I(G)^{args.power} = {res.regularity}")
    print(f"scanned {res.variable_count} variables, {res.survivor_count} non-cone subsets")
    print(f"field: {res.field_note}")
    if args.emit_witness:
        subset = ", ".join(res.witness_subset)
        print(f"witness: W = {{{subset}}} at degree d = {res.witness_degree}")
    return EXIT_OK


def _parse_product(g, text):
    labels = {g.label(v): v for v in g.vertices}
    edges = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        toks = [t.strip() for t in part.split(",")]
        if len(toks) != 2:
            raise GraphError(f"bad edge {part!r}; expected 'a,b'")
        try:
            edges.append((labels[toks[0]], labels[toks[1]]))
        except KeyError as exc:
            raise GraphError(f"unknown vertex label {exc.args[0]!r}") from None
    if not edges:
        raise GraphError("empty edge product")
    return edges


def cmd_colon(args):
    try:
        g = _load_graph(args.file)
        product = _parse_product(g, args.product)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    built, pairs = colon_by_even_connection(g, product)
    s = len(product)
    direct = colon(ideal_power(edge_ideal(g), s + 1), monomial_of_edges(g, product))
    index = {v: i for i, v in enumerate(g.vertices)}
    even_monomials = set()
    witness = {}
    for (u, v), path in pairs:
        key = tuple(sorted((index[u], index[v])))
        even_monomials.add(key)
        witness.setdefault(key, path)
    edge_keys = {tuple(sorted((index[u], index[v]))) for u, v in g.edges}
    print(f"(I(G)^{s + 1} : {monomial_of_edges(g, product).text(built.variables)})")
    for gen in built.generators:
        sup = sorted(v for v, _ in gen.pairs)
        key = tuple(sup) if len(sup) == 2 else (sup[0], sup[0])
        tags = []
        if key in edge_keys:
            tags.append("edge")
        if key in even_monomials:
            walk = "-".join(g.label(p) for p in witness[key])
            tags.append(f"even-connected via {walk}")
        print(f"  {gen.text(built.variables)}    [{'; '.join(tags)}]")
    if built.generator_set() != direct.generator_set():
        print("error: even-connection colon disagrees with the direct colon", file=sys.stderr)
        return EXIT_COLON_MISMATCH
    print("verified: matches the direct colon computation")
    return EXIT_OK


def _parse_powers(text):
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad power range {text!r}")
    return tuple(range(lo, hi + 1))


def cmd_verify(args):
    try:
        powers = _parse_powers(args.powers)
        spec = GraphFamilySpec(
            max_vertices=args.max_vertices, family=args.family, dedup=args.dedup
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    max_vars = None if not args.heavy else 1 << 30
    summary = run_verification(
        spec, s_values=powers, max_vars=max_vars, workers=worker_count()
    )
    if args.json:
        doc = {
            "family": args.family,
            "max_vertices": args.max_vertices,
            "powers": list(powers),
            "dedup": args.dedup,
            "records": [r.to_json_dict() for r in summary.records],
            "checked": summary.checked,
            "failed": summary.failed,
            "skipped": summary.skipped,
        }
        print(json.dumps(doc, indent=2))
    else:
        for rec in summary.records:
            for c in rec.claims:
                mark = {"pass": "ok", "fail": "FAIL", "skip": "skip"}[c.status]
                line = f"[{mark:>4}] graph#{rec.index} ({rec.vertex_count}v/{rec.edge_count}e) {c.claim} {c.detail}"
                if c.status == "fail":
                    line += f"  expected {c.expected} got {c.actual}"
                if c.note:
                    line += f"  ({c.note})"
                print(line)
        print(summary.line())
    return EXIT_OK if summary.failed == 0 else 4


def build_parser():
    parser = argparse.ArgumentParser(
        prog="regpow",
        description="Regularity of powers of edge ideals of unicyclic graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="closed-form regularity report")
    p.add_argument("file")
    p.add_argument("--max-power", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("oracle", help="brute-force homological regularity")
    p.add_argument("file")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--max-vars", type=int, default=None)
    p.add_argument("--heavy", action="store_true")
    p.add_argument("--emit-witness", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("colon", help="colon ideal via even-connections")
    p.add_argument("file")
    p.add_argument("--product", required=True, help='edge multiset "a,b;c,d;..."')
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("verify", help="sweep a graph family against the oracle")
    p.add_argument("--family", choices=FAMILIES, default="unicyclic")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--powers", default="1..2")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--heavy", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
