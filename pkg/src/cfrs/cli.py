"""Command-line front end.

Subcommands: analyze, solve, verify, gen, tree, digraph.  Exit codes:
0 success (and accepted verifications), 1 invalid input or rejected
verification, 2 exact-solve budget exceeded.  Identical inputs and flags
produce byte-identical output files; the only non-deterministic output is
the elapsed time, which goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as formats
from .branching import DEFAULT_BUDGET
from .containment import build_containment, height, width
from .errors import BudgetError, CfrsError
from .instances import (
    gen_block_tree,
    gen_ib_reduction,
    gen_random,
    gen_random_laminar,
    gen_vc_reduction,
    parse_edge_list,
)
from .matrix import (
    BinaryMatrix,
    build_phylogeny,
    count_distinct_cols,
    find_conflict,
    verify_row_split,
)
from .solvers import (
    approx_distinct_2,
    approx_height,
    approx_width,
    solve_exact,
    solve_linear_heuristic,
)

METHODS = ("exact-rows", "exact-distinct", "linear", "height", "width", "distinct-2")


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _load_matrix(path: str) -> BinaryMatrix:
    return formats.parse_matrix(_read(path))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfrs",
        description="Solve, approximate, and certify conflict-free row splits "
                    "of binary matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print matrix statistics")
    p.add_argument("file")

    p = sub.add_parser("solve", help="compute a conflict-free row split")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, default="linear")
    p.add_argument("--out", help="write the split to this file")
    p.add_argument("--json", help="write the report to this file")
    p.add_argument("--budget", type=int, default=None,
                   help="branching budget for exact methods "
                        "(default: CFRS_BUDGET or 10^8)")

    p = sub.add_parser("verify", help="check a split file against a matrix")
    p.add_argument("matrix")
    p.add_argument("split")

    p = sub.add_parser("gen", help="generate an instance")
    gen_sub = p.add_subparsers(dest="family", required=True)

    g = gen_sub.add_parser("md", help="complete d-ary block-tree family")
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--h", type=int, required=True)
    g.add_argument("--out")

    g = gen_sub.add_parser("vc-reduction",
                           help="vertex-cover reduction of a cubic graph")
    g.add_argument("--graph", required=True, help="edge-list file")
    g.add_argument("--out")

    g = gen_sub.add_parser("ib-reduction",
                           help="distinct-rows reduction of a cubic graph")
    g.add_argument("--graph", required=True, help="edge-list file")
    g.add_argument("--out")

    g = gen_sub.add_parser("random", help="seeded random matrix")
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--cols", type=int, required=True)
    g.add_argument("--density", type=float, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")

    g = gen_sub.add_parser("laminar", help="seeded conflict-free matrix")
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")

    p = sub.add_parser("tree", help="export the phylogeny as DOT")
    p.add_argument("file")
    p.add_argument("--dot", required=True)

    p = sub.add_parser("digraph", help="export the containment digraph as DOT")
    p.add_argument("file")
    p.add_argument("--dot", required=True)

    return parser


def _cmd_analyze(args) -> int:
    matrix = _load_matrix(args.file)
    digraph = build_containment(matrix)
    witness = find_conflict(matrix)
    print(f"rows: {matrix.m}")
    print(f"cols: {matrix.n}")
    print(f"distinct_cols: {count_distinct_cols(matrix)}")
    print(f"height: {height(digraph)}")
    print(f"width: {width(digraph)}")
    print(f"conflict_free: {'yes' if witness is None else 'no'}")
    if witness is not None:
        print(f"conflict: {witness.describe(matrix)}")
    return 0


def _cmd_solve(args) -> int:
    matrix = _load_matrix(args.file)
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("CFRS_BUDGET", DEFAULT_BUDGET))
    if args.method == "exact-rows":
        split, report = solve_exact(matrix, "rows", budget)
    elif args.method == "exact-distinct":
        split, report = solve_exact(matrix, "distinct", budget)
    elif args.method == "linear":
        split, report = solve_linear_heuristic(matrix)
    elif args.method == "height":
        split, report = approx_height(matrix)
    elif args.method == "width":
        split, report = approx_width(matrix)
    else:
        split, report = approx_distinct_2(matrix)
    for key, value in report.to_json_dict().items():
        print(f"{key}: {value}")
    print(f"elapsed: {report.elapsed_seconds:.3f}s", file=sys.stderr)
    if args.out:
        _write(args.out, formats.format_split(split))
    if args.json:
        _write(args.json, json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0


def _cmd_verify(args) -> int:
    matrix = _load_matrix(args.matrix)
    split = formats.parse_split(_read(args.split))
    verdict = verify_row_split(matrix, split, require_conflict_free=True)
    if verdict.ok:
        print("accept")
        return 0
    print(f"reject: {verdict.reason}")
    return 1


def _cmd_gen(args) -> int:
    if args.family == "md":
        matrix = gen_block_tree(args.d, args.h)
    elif args.family == "vc-reduction":
        matrix = gen_vc_reduction(parse_edge_list(_read(args.graph)))
    elif args.family == "ib-reduction":
        matrix = gen_ib_reduction(parse_edge_list(_read(args.graph)))
    elif args.family == "random":
        matrix = gen_random(args.rows, args.cols, args.density, args.seed)
    else:
        matrix = gen_random_laminar(args.rows, args.k, args.seed)
    text = formats.format_matrix(matrix)
    if args.out:
        _write(args.out, text)
    else:
        print(text, end="")
    return 0


def _cmd_tree(args) -> int:
    matrix = _load_matrix(args.file)
    tree = build_phylogeny(matrix)
    _write(args.dot, formats.phylo_to_dot(tree))
    return 0


def _cmd_digraph(args) -> int:
    matrix = _load_matrix(args.file)
    _write(args.dot, formats.digraph_to_dot(build_containment(matrix)))
    return 0


_HANDLERS = {
    "analyze": _cmd_analyze,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "tree": _cmd_tree,
    "digraph": _cmd_digraph,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; exit 2 is reserved for exceeded
        # budgets, so remap (keep 0 for --help)
        return 0 if exc.code == 0 else 1
    try:
        return _HANDLERS[args.command](args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CfrsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
