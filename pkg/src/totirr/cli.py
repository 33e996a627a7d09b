"""Command-line surface: generate graphs, apply operations, compute
indices, evaluate bounds, and run the verification searches.

All results go to stdout as line-delimited key=value records (graph6 for
graphs); diagnostics go to stderr.  Exit codes: 0 success, 1 input error,
2 internal invariant violation (including any bound falsification).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, Tuple

from .bounds import BoundReport, bound_theorem1, evaluate_bound
from .errors import InputError, InternalError
from .families import (
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_empty,
    gen_extremal_total_irr,
    gen_path,
    gen_random_tree,
    gen_star,
)
from .formats import emit_graph6, format_record, parse_edge_list, parse_graph6
from .graph import Graph
from .indices import (
    collatz_sinogowitz,
    degree_variance,
    graph_total_irregularity,
    irregularity,
    zagreb_m1,
    zagreb_m2,
)
from .products import ProductKind, apply_product
from .search import SearchOutcome, probe_open_problem, sweep_operation_bounds, verify_theorem1

INDEX_FUNCS = {
    "irr_t": graph_total_irregularity,
    "irr": irregularity,
    "m1": zagreb_m1,
    "m2": zagreb_m2,
    "var": degree_variance,
    "cs": collatz_sinogowitz,
}

PRODUCT_TAGS = [k.value for k in ProductKind]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="totirr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute indices for input graphs")
    p_compute.add_argument("--input", default="-", help="input file, '-' for stdin")
    p_compute.add_argument("--format", choices=["g6", "edgelist"], default="g6")
    p_compute.add_argument(
        "--indices",
        default="irr_t,irr,m1,m2,var,cs",
        help="comma-separated subset of irr_t,irr,m1,m2,var,cs",
    )

    p_gen = sub.add_parser("gen", help="generate a named graph family as graph6")
    p_gen.add_argument(
        "family",
        choices=["path", "cycle", "complete", "star", "empty", "multipartite", "extremal", "tree"],
    )
    p_gen.add_argument("params", nargs="*", type=int, help="family parameters")
    p_gen.add_argument("--seed", type=int, default=0, help="seed for tree generation")

    p_op = sub.add_parser("op", help="apply a binary operation to two graph6 graphs")
    p_op.add_argument("kind", choices=PRODUCT_TAGS)
    p_op.add_argument("a", help="left operand, graph6")
    p_op.add_argument("b", help="right operand, graph6")
    p_op.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p_bound = sub.add_parser("bound", help="evaluate a theorem bound")
    p_bound.add_argument("kind", choices=PRODUCT_TAGS + ["theorem1"])
    p_bound.add_argument("a", nargs="?", help="left operand, graph6")
    p_bound.add_argument("b", nargs="?", help="right operand, graph6")
    p_bound.add_argument("--n", type=int, default=None, help="vertex count (theorem1 only)")

    p_search = sub.add_parser("search", help="run a verification search")
    search_sub = p_search.add_subparsers(dest="search_task", required=True)

    p_t1 = search_sub.add_parser("theorem1", help="exhaustive max total irregularity")
    p_t1.add_argument("--n", type=int, required=True)
    p_t1.add_argument("--workers", type=int, default=1)
    p_t1.add_argument("--allow-large", action="store_true", help="opt into n = 8 (2^28 graphs)")

    p_sw = search_sub.add_parser("sweep", help="exhaustive bound sweep over operand pairs")
    p_sw.add_argument("--op", required=True, choices=PRODUCT_TAGS)
    p_sw.add_argument("--n1", type=int, required=True)
    p_sw.add_argument("--n2", type=int, required=True)
    p_sw.add_argument("--workers", type=int, default=1)

    p_pr = search_sub.add_parser("probe", help="randomized probe of the open tightness question")
    p_pr.add_argument("--op", required=True, choices=["disjunction", "symdiff"])
    p_pr.add_argument("--n1", type=int, required=True)
    p_pr.add_argument("--n2", type=int, required=True)
    p_pr.add_argument("--samples", type=int, required=True)
    p_pr.add_argument("--seed", type=int, required=True)

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_graphs(text: str, fmt: str) -> List[Graph]:
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(parse_graph6(line))
    if not graphs:
        raise InputError("no graphs in input")
    return graphs


def _cmd_compute(args, out) -> int:
    names = [name.strip() for name in args.indices.split(",") if name.strip()]
    for name in names:
        if name not in INDEX_FUNCS:
            raise InputError(f"unknown index {name!r}; choose from {','.join(INDEX_FUNCS)}")
    if not names:
        raise InputError("no indices requested")
    for g in _load_graphs(_read_input(args.input), args.format):
        g6 = emit_graph6(g)
        for name in names:
            value = INDEX_FUNCS[name](g)
            print(
                format_record(
                    [("task", "compute"), ("input", g6), ("index", name), ("value", value)]
                ),
                file=out,
            )
    return 0


def _cmd_gen(args, out) -> int:
    family, params = args.family, args.params

    def one_param() -> int:
        if len(params) != 1:
            raise InputError(f"family {family!r} takes exactly one integer parameter")
        return params[0]

    if family == "path":
        g = gen_path(one_param())
    elif family == "cycle":
        g = gen_cycle(one_param())
    elif family == "complete":
        g = gen_complete(one_param())
    elif family == "star":
        g = gen_star(one_param())
    elif family == "empty":
        g = gen_empty(one_param())
    elif family == "extremal":
        g = gen_extremal_total_irr(one_param())
    elif family == "multipartite":
        if not params:
            raise InputError("multipartite needs at least one part size")
        g = gen_complete_multipartite(params)
    else:  # tree
        g = gen_random_tree(one_param(), args.seed)
    print(emit_graph6(g), file=out)
    return 0


def _cmd_op(args, out) -> int:
    g = parse_graph6(args.a)
    h = parse_graph6(args.b)
    composite = apply_product(ProductKind(args.kind), g, h)
    text = emit_graph6(composite)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return 0


def _bound_record(report: BoundReport, g6_a: str, g6_b: str) -> str:
    return format_record(
        [
            ("task", "bound"),
            ("kind", report.kind.value),
            ("g", g6_a),
            ("h", g6_b),
            ("n1", report.n1),
            ("m1", report.m1),
            ("n2", report.n2),
            ("m2", report.m2),
            ("irr_t_g", report.irr_t_g),
            ("irr_t_h", report.irr_t_h),
            ("actual", report.actual),
            ("bound", report.bound),
            ("slack", report.slack),
            ("tight", report.tight),
            ("hypothesis_ok", report.hypothesis_ok),
        ]
    )


def _cmd_bound(args, out) -> int:
    if args.kind == "theorem1":
        if args.n is None:
            raise InputError("bound theorem1 requires --n")
        print(
            format_record(
                [("task", "bound"), ("kind", "theorem1"), ("n", args.n), ("bound", bound_theorem1(args.n))]
            ),
            file=out,
        )
        return 0
    if args.a is None or args.b is None:
        raise InputError(f"bound {args.kind} requires two graph6 operands")
    g = parse_graph6(args.a)
    h = parse_graph6(args.b)
    report = evaluate_bound(ProductKind(args.kind), g, h)
    print(_bound_record(report, emit_graph6(g), emit_graph6(h)), file=out)
    return 0


def _search_record(outcome: SearchOutcome) -> str:
    fields: List[Tuple[str, object]] = [("task", "search"), ("kind", outcome.task)]
    if outcome.task == "theorem1":
        fields += [
            ("n", outcome.n1),
            ("cases", outcome.cases_examined),
            ("max_value", outcome.max_value),
            ("witness", outcome.witness[0]),
        ]
    else:
        fields += [("n1", outcome.n1), ("n2", outcome.n2)]
        if outcome.seed is not None:
            fields.append(("seed", outcome.seed))
        fields += [
            ("cases", outcome.cases_examined),
            ("min_slack", outcome.min_slack),
            ("max_ratio", outcome.max_ratio),
            ("witness_g", outcome.witness[0] if outcome.witness else None),
            ("witness_h", outcome.witness[1] if len(outcome.witness) > 1 else None),
        ]
    return format_record(fields)


def _cmd_search(args, out) -> int:
    if args.search_task == "theorem1":
        outcome = verify_theorem1(args.n, workers=args.workers, allow_large=args.allow_large)
    elif args.search_task == "sweep":
        outcome = sweep_operation_bounds(
            ProductKind(args.op), args.n1, args.n2, workers=args.workers
        )
    else:
        outcome = probe_open_problem(
            ProductKind(args.op), args.n1, args.n2, samples=args.samples, seed=args.seed
        )
    print(_search_record(outcome), file=out)
    return 0


def cli_main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Run one CLI invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        if args.command == "compute":
            return _cmd_compute(args, out)
        if args.command == "gen":
            return _cmd_gen(args, out)
        if args.command == "op":
            return _cmd_op(args, out)
        if args.command == "bound":
            return _cmd_bound(args, out)
        return _cmd_search(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
