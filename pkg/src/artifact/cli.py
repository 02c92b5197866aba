"""Command line front end.

Subcommands: cc2, graphs, bounds, formulas, verify, racg.  Results go
to stdout (or --out), diagnostics to stderr.  Exit codes: 0 success,
2 invalid input, 3 verification mismatch, 4 enumeration cap or sweep
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import DiagramError, parse_edge_list, parse_matrix, parse_name
from .formulas import (
    cc2_A,
    cc2_C,
    cc2_affine_A,
    cc2_affine_C,
    cc2_odd_circle,
    cc2_racg,
    cc2_triangle,
    ccm_direct_product,
    ccm_free_product,
    read_presentation_graph,
)
from .oddgraph import (
    EnumerationBudgetError,
    bounds,
    cc2,
    export_dot,
    gamma_k,
    omega_k,
)
from .oracle import CapExceededError, enumerate_group, involution_classes
from .diagram import INFINITY


def _add_input_flags(sub):
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--name", help="diagram name, e.g. A4, ~C3, I2(7)+B2")
    grp.add_argument("--file", help="path to a JSON matrix or plain edge list")


def _load_diagram(args):
    if args.name is not None:
        return parse_name(args.name), args.name
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_matrix(text), args.file
    return parse_edge_list(text), args.file


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _subset_name(subset):
    return "W_{" + ",".join(str(i + 1) for i in subset) + "}"


def _sum_line(report, finite):
    entries = list(report.per_rank)
    if entries and not finite:
        # the full-set entry of an infinite diagram is always 0; the
        # customary table style stops one short of it
        dropped = entries.pop()
        assert dropped == 0
    if not entries:
        return f"0={report.total}"
    return "+".join(str(x) for x in entries) + f"={report.total}"


def _cmd_cc2(args):
    mat, _ = _load_diagram(args)
    report = cc2(mat, include_bounds=True)
    if args.format == "json":
        _emit(args, _json_text(report.to_dict()))
        return 0
    lines = [_sum_line(report, report.bounds.is_finite)]
    for c in report.classes:
        word = " ".join(str(i + 1) for i in c.word)
        lines.append(
            f"rank {c.rank}  {_subset_name(c.subset)}  {c.decomposition}  word: {word}"
        )
    b = report.bounds
    lines.append(
        f"bounds: omega_lower={b.omega_lower} "
        f"maximal_spherical_upper={b.maximal_spherical_upper} "
        f"numeric_upper={b.numeric_upper} is_finite={'yes' if b.is_finite else 'no'}"
    )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_graphs(args):
    mat, _ = _load_diagram(args)
    graph = omega_k(mat, args.k) if args.omega else gamma_k(mat, args.k)
    if args.format == "dot":
        _emit(args, export_dot(graph))
        return 0
    if args.format == "json":
        _emit(args, _json_text(graph.to_dict()))
        return 0
    lines = [
        f"{graph.kind}{graph.k}: {len(graph.vertices)} vertices, "
        f"{len(graph.edges)} edges, {graph.n_components} components"
    ]
    by_component = {}
    for v in graph.vertices:
        by_component.setdefault(graph.component_id[v], []).append(v)
    for cid in sorted(by_component):
        names = " ".join(_subset_name(v) for v in by_component[cid])
        lines.append(f"component {cid}: {names}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_bounds(args):
    mat, _ = _load_diagram(args)
    b = bounds(mat)
    if args.format == "json":
        _emit(args, _json_text(b.to_dict()))
        return 0
    lines = [
        f"omega_lower = {b.omega_lower}",
        f"maximal_spherical_upper = {b.maximal_spherical_upper}",
        f"numeric_upper = {b.numeric_upper}",
        f"is_finite = {'yes' if b.is_finite else 'no'}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _parse_bond_arg(text):
    if text in ("inf", "Inf", "INF", "infinity"):
        return INFINITY
    try:
        return int(text)
    except ValueError:
        raise DiagramError(f"bond order must be an integer or 'inf', got {text!r}") from None


def _cmd_formulas(args):
    which = args.which
    if which == "triangle":
        _expect_params(args, 3)
        value = cc2_triangle(*(_parse_bond_arg(x) for x in args.params))
    elif which in ("A", "C", "affine-A", "affine-C"):
        _expect_params(args, 1)
        n = _expect_int(args.params[0])
        fn = {
            "A": cc2_A,
            "C": cc2_C,
            "affine-A": cc2_affine_A,
            "affine-C": cc2_affine_C,
        }[which]
        value = fn(n)
    elif which == "odd-circle":
        if args.name is None and args.file is None:
            raise DiagramError("odd-circle needs --name or --file")
        mat, _ = _load_diagram(args)
        value = cc2_odd_circle(mat)
    elif which == "free":
        if not args.params:
            raise DiagramError("free needs at least one class count")
        value = ccm_free_product([_expect_int(x) for x in args.params])
    elif which == "direct2":
        _expect_params(args, 2)
        a, b = (_expect_int(x) for x in args.params)
        value = ccm_direct_product({2: a}, {2: b}, 2)
    else:  # pragma: no cover - argparse restricts choices
        raise DiagramError(f"unknown formula {which!r}")
    if args.format == "json":
        _emit(args, _json_text({"formula": which, "value": value}))
    else:
        _emit(args, f"{value}\n")
    return 0


def _expect_params(args, count):
    if len(args.params) != count:
        raise DiagramError(f"{args.which} takes exactly {count} parameter(s), got {len(args.params)}")


def _expect_int(text):
    try:
        return int(text)
    except ValueError:
        raise DiagramError(f"expected an integer, got {text!r}") from None


def _cmd_verify(args):
    mat, label = _load_diagram(args)
    report = cc2(mat)
    table = enumerate_group(mat, cap=args.cap, name=label)
    classes = involution_classes(table)
    oracle_per_rank = [0] * mat.rank
    for c in classes:
        oracle_per_rank[c.rank - 1] += 1
    match = list(report.per_rank) == oracle_per_rank
    if args.format == "json":
        _emit(
            args,
            _json_text(
                {
                    "per_rank": list(report.per_rank),
                    "oracle_per_rank": oracle_per_rank,
                    "total": report.total,
                    "oracle_total": len(classes),
                    "group_order": len(table),
                    "match": match,
                }
            ),
        )
    else:
        lines = ["rank  graphs  oracle"]
        for k in range(mat.rank):
            lines.append(f"{k + 1:<5} {report.per_rank[k]:<7} {oracle_per_rank[k]}")
        lines.append(f"total {report.total:<7} {len(classes)}")
        lines.append(
            f"verify: {'OK' if match else 'MISMATCH'} (group order {len(table)})"
        )
        _emit(args, "\n".join(lines) + "\n")
    if not match:
        print(f"verification mismatch on {label}", file=sys.stderr)
        return 3
    return 0


def _cmd_racg(args):
    with open(args.file, "r", encoding="utf-8") as fh:
        n, edges = read_presentation_graph(fh.read())
    value = cc2_racg(n, edges)
    if args.format == "json":
        _emit(args, _json_text({"vertices": n, "edges": len(edges), "value": value}))
    else:
        _emit(args, f"{value}\n")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="artifact",
        description="Involution conjugacy classes of Coxeter groups via odd graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cc2", help="count involution classes and list representatives")
    _add_input_flags(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", help="write the result to a file instead of stdout")
    p.set_defaults(func=_cmd_cc2)

    p = sub.add_parser("graphs", help="emit one graph Gamma^k or Omega^k")
    _add_input_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--omega", action="store_true", help="coarse graph instead of Gamma^k")
    p.add_argument("--format", choices=("table", "json", "dot"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_graphs)

    p = sub.add_parser("bounds", help="lower/upper estimates for the class count")
    _add_input_flags(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("formulas", help="closed-form counts for special families")
    p.add_argument(
        "which",
        choices=("triangle", "A", "C", "affine-A", "affine-C", "odd-circle", "free", "direct2"),
    )
    p.add_argument("params", nargs="*", help="numeric parameters (family rank, bonds, ...)")
    p.add_argument("--name", help="diagram name (odd-circle only)")
    p.add_argument("--file", help="diagram file (odd-circle only)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_formulas)

    p = sub.add_parser("verify", help="check the graph counts against group enumeration")
    _add_input_flags(p)
    p.add_argument("--cap", type=int, default=None, help="element cap for the enumeration")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("racg", help="clique count of a right-angled presentation graph")
    p.add_argument("--file", required=True, help="presentation graph as an edge list")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_racg)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
