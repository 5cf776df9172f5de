"""Command-line interface: count, enumerate, aggregate, verify.

Machine-readable results go to stdout (a single JSON document under
--json); timing and diagnostics go to stderr.  Exit codes: 0 success,
1 usage or input error, 2 verification failure or internal inconsistency.
"""

import argparse
import json
import sys
import time

from .aggregate import MAX_CLASS_VERTICES, aggregate_counts, labeled_copies
from .enumeration import CountReport, h_burnside, stream_masks, tau
from .errors import GraphTopError, InternalCheckError
from .expr import FileRef, build_graph, parse_graph_expr
from .formulas import formula_for_graph
from .graphs import canonical_code
from .topology import Digraph
from .verify import run_verify


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _dump(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _code_str(code):
    n, bits = code
    return f"{n}:{bits:x}"


def _graph_from_args(args):
    if (args.expr is None) == (args.file is None):
        raise _UsageError("give exactly one of an expression or --file")
    if args.file is not None:
        return build_graph(FileRef(args.file))
    return build_graph(parse_graph_expr(args.expr))


def _cmd_count(args):
    g = _graph_from_args(args)
    t0 = time.perf_counter()
    t = tau(g, args.budget_edges, workers=args.workers)
    h = h_burnside(g, args.budget_edges)
    elapsed = time.perf_counter() - t0
    report = CountReport(
        graph=canonical_code(g), tau=t, h=h, method="enumeration", elapsed=elapsed
    )
    formula = formula_for_graph(g, args.budget_edges)
    if (
        formula is not None
        and formula.tau is not None
        and (formula.tau, formula.h) != (t, h)
    ):
        raise InternalCheckError(
            f"closed form {formula.theorem} gives ({formula.tau},{formula.h}), "
            f"enumeration gives ({t},{h})"
        )
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    if args.json:
        doc = {
            "graph": _code_str(report.graph),
            "n": g.n,
            "edges": g.edge_count,
            "tau": report.tau,
            "h": report.h,
            "method": report.method,
        }
        if formula is not None:
            doc["formula"] = formula.as_json_dict()
        print(_dump(doc))
    else:
        line = (
            f"graph {_code_str(report.graph)} n={g.n} edges={g.edge_count} "
            f"tau={report.tau} h={report.h}"
        )
        if formula is not None:
            line += f" (closed form: {formula.theorem})"
        print(line)
    return 0


def _dot_block(index, d):
    lines = [f"digraph d{index} {{"]
    for v in range(d.n):
        lines.append(f"  {v};")
    for u, v in d.arcs():  # a bidirected pair renders as two arcs
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines)


def _cmd_enumerate(args):
    g = _graph_from_args(args)
    for index, masks in enumerate(
        stream_masks(g, args.budget_edges, workers=args.workers)
    ):
        d = Digraph(g.n, masks)
        if args.dot:
            print(_dot_block(index, d))
        else:
            print(_dump({"arcs": [list(a) for a in d.arcs()], "n": d.n}))
    return 0


def _cmd_aggregate(args):
    n = args.n
    if n < 1 or n > MAX_CLASS_VERTICES:
        raise _UsageError(f"-n must be between 1 and {MAX_CLASS_VERTICES}")
    if n >= 7 and not args.allow_large:
        raise _UsageError(f"aggregate -n {n} is expensive; pass --allow-large")
    timing = [] if n >= 7 and args.workers <= 1 else None
    tau_n, h_n, table = aggregate_counts(
        n, args.budget_edges, workers=args.workers, timing=timing
    )
    if timing:
        for idx, seconds in timing:
            print(f"class {idx}: {seconds:.3f}s", file=sys.stderr)
    rows = [
        {
            "class_index": idx,
            "edge_count": e.graph.edge_count,
            "aut_order": e.aut_order,
            "tau": e.tau,
            "h": e.h,
            "labeled_copies": labeled_copies(n, e.aut_order),
        }
        for idx, e in enumerate(table.entries)
    ]
    if args.json:
        print(_dump({"n": n, "tau_n": tau_n, "h_n": h_n, "classes": rows}))
    else:
        print("class_index,edge_count,aut_order,tau,h,labeled_copies")
        for row in rows:
            print(
                f"{row['class_index']},{row['edge_count']},{row['aut_order']},"
                f"{row['tau']},{row['h']},{row['labeled_copies']}"
            )
        print(_dump({"n": n, "tau_n": tau_n, "h_n": h_n}))
    return 0


def _cmd_verify(args):
    return run_verify(
        suite=args.suite,
        budget_edges=args.budget_edges,
        corrupt_memo=args.corrupt_memo,
    )


def _build_parser():
    parser = _ArgumentParser(prog="graphtop")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_json=True):
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--budget-edges", type=int, default=None, dest="budget_edges")
        if with_json:
            p.add_argument("--json", action="store_true")

    count = sub.add_parser("count", help="tau and h for one graph")
    count.add_argument("expr", nargs="?", help="graph expression, e.g. box(K2,C4)")
    count.add_argument("--file", help="edge-list file instead of an expression")
    common(count)
    count.set_defaults(func=_cmd_count)

    enum = sub.add_parser("enumerate", help="stream the transitive digraphs")
    enum.add_argument("expr", nargs="?")
    enum.add_argument("--file")
    fmt = enum.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--jsonl", action="store_true", help="JSON lines (default)")
    common(enum, with_json=False)
    enum.set_defaults(func=_cmd_enumerate)

    agg = sub.add_parser("aggregate", help="sum over all n-vertex graph classes")
    agg.add_argument("-n", type=int, required=True)
    agg.add_argument("--allow-large", action="store_true")
    common(agg)
    agg.set_defaults(func=_cmd_aggregate)

    ver = sub.add_parser("verify", help="run the differential check suites")
    ver.add_argument(
        "--suite", choices=("all", "formulas", "oracles"), default="all"
    )
    ver.add_argument("--budget-edges", type=int, default=None, dest="budget_edges")
    ver.add_argument("--corrupt-memo", action="store_true", help=argparse.SUPPRESS)
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (GraphTopError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
