"""Command-line interface.

Exit codes: 0 on success, 1 for usage or input errors, 2 when
``verify --fail-on-mismatch`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import formulas
from .centrality import DegenerateGraphError, centrality_profile
from .edgelist import (
    format_edge_list,
    format_labels,
    labels_path,
    parse_edge_list,
    read_edge_list,
    to_dot,
    to_json_dict,
)
from .families import FAMILIES, FamilySpec, generate, parse_family_spec
from .graph import Graph, GraphError
from .numeric import format_rational
from .products import cartesian_product, direct_product
from .verify import RECORD_FIELDS, verify_range

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(operand: str) -> Graph:
    """Resolve ``family:<name>:<m>``, ``-`` (stdin) or an edge-list path."""
    if operand.startswith("family:"):
        try:
            return generate(parse_family_spec(operand))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        if operand == "-":
            return parse_edge_list(sys.stdin.read())
        return read_edge_list(operand)
    except OSError as exc:
        raise UsageError(f"cannot read {operand}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise UsageError(f"{operand}: {exc}") from None


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text)


def _render_graph(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_dict(g), indent=2) + "\n"
    if fmt == "dot":
        return to_dot(g)
    return format_edge_list(g)


def _write_graph(g: Graph, fmt: str, out_path: str | None) -> None:
    _emit(_render_graph(g, fmt), out_path)
    if out_path is not None and fmt == "edgelist" and g.labels is not None:
        labels_path(out_path).write_text(format_labels(g))


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = generate(FamilySpec(args.family, args.m))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_graph(g, args.format, args.out)
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    left = load_graph(args.left)
    right = load_graph(args.right)
    build = cartesian_product if args.op == "cartesian" else direct_product
    try:
        product = build(left, right)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _write_graph(product.graph, args.format, args.out)
    return EXIT_OK


def centrality_csv(g: Graph) -> str:
    report = centrality_profile(g)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["vertex", "label", "R", "H"])
    for row in report.per_vertex:
        writer.writerow([row.vertex, row.label, format_rational(row.R), format_rational(row.H)])
    c = report.centralization
    buf.write(f"#centralization,{'undefined' if c is None else format_rational(c)}\n")
    return buf.getvalue()


def centrality_json(g: Graph) -> str:
    report = centrality_profile(g)
    doc = {
        "order": report.order,
        "vertices": [
            {
                "vertex": row.vertex,
                "label": row.label,
                "R": format_rational(row.R),
                "H": format_rational(row.H),
            }
            for row in report.per_vertex
        ],
        "max_H": format_rational(report.max_H),
        "argmax": list(report.argmax),
        "centralization": (
            None if report.centralization is None else format_rational(report.centralization)
        ),
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_centrality(args: argparse.Namespace) -> int:
    if args.format == "dot":
        raise UsageError("dot output is only available for graph-emitting commands")
    g = load_graph(args.graph)
    try:
        text = centrality_json(g) if args.format == "json" else centrality_csv(g)
    except DegenerateGraphError as exc:
        raise UsageError(f"degenerate graph: {exc}") from None
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.m_min > args.m_max:
        raise UsageError(f"--m-min ({args.m_min}) exceeds --m-max ({args.m_max})")
    if args.theorem == "all":
        chosen = None
    else:
        try:
            chosen = [formulas.theorem(args.theorem)]
        except KeyError:
            raise UsageError(f"unknown theorem {args.theorem!r}") from None
    summary = verify_range(chosen, args.m_min, args.m_max)

    if args.format == "json":
        text = json.dumps([r.as_json() for r in summary.records], indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=RECORD_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(r.as_row() for r in summary.records)
        text = buf.getvalue()
    _emit(text, args.out)

    if not args.quiet:
        for number, c in summary.counts.items():
            print(
                f"theorem {number}: checked={c.checked} matched={c.matched} "
                f"mismatched={c.mismatched}",
                file=sys.stderr,
            )
    if args.fail_on_mismatch and summary.mismatches:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if g.order == 0:
        raise UsageError("graph has no vertices")
    _emit(to_dot(g), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="harmonic-products",
        description="Exact harmonic centrality of graphs and P_2 graph products.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a family graph as an edge list")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--format", choices=("edgelist", "json", "dot"), default="edgelist")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    prod = sub.add_parser("product", help="Cartesian or direct product of two graphs")
    prod.add_argument("--op", required=True, choices=("cartesian", "direct"))
    prod.add_argument("--left", required=True, help="family:<name>:<m> or edge-list path")
    prod.add_argument("--right", required=True, help="family:<name>:<m> or edge-list path")
    prod.add_argument("--format", choices=("edgelist", "json", "dot"), default="edgelist")
    prod.add_argument("--out", help="output path; pair labels go to <out>.labels")
    prod.set_defaults(func=cmd_product)

    cent = sub.add_parser("centrality", help="harmonic centrality report")
    cent.add_argument("graph", help="edge-list path, '-' for stdin, or family:<name>:<m>")
    cent.add_argument("--format", choices=("csv", "json", "dot"), default="csv")
    cent.add_argument("--out")
    cent.set_defaults(func=cmd_centrality)

    ver = sub.add_parser("verify", help="check closed forms against the BFS oracle")
    ver.add_argument("--theorem", default="all", help="theorem number (3.1..3.12) or 'all'")
    ver.add_argument("--m-min", type=int, default=3)
    ver.add_argument("--m-max", type=int, default=12)
    ver.add_argument("--format", choices=("csv", "json"), default="csv")
    ver.add_argument("--fail-on-mismatch", action="store_true")
    ver.add_argument("--quiet", action="store_true", help="suppress the per-theorem summary")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    dot = sub.add_parser("export-dot", help="render a graph as undirected DOT")
    dot.add_argument("graph", help="edge-list path, '-' for stdin, or family:<name>:<m>")
    dot.add_argument("--out")
    dot.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
