"""Command-line interface emitting machine-checkable JSON result documents.

Every command prints one JSON document to stdout.  Documents are
self-certifying: an avoidable path always ships with one completing
induced cycle per extension (or an explicit no-extensions marker), a
non-avoidable verdict ships its failing extension, and freeness outcomes
say exactly which graph they certify, so consumers can re-validate
without re-running the search.

Exit codes: 0 for success with an object, 3 for a certified absence
(freeness, non-avoidability, no pair), 2 for usage or parse errors, and 1
when a verification command detects a violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .avoidability import Extension, Verdict, check_avoidable
from .corollaries import (
    counterexample_graph,
    find_two_nonadjacent_avoidable,
    verify_counterexample,
)
from .exhaustive import check_all_graphs
from .formats import load_graphs, serialize_edge_list
from .generators import MAX_ENUMERATION_N, gnp, make_cycle, random_chordal
from .graphs import Graph
from .solver import (
    SolveResult,
    SolveStats,
    find_avoidable_path,
    find_avoidable_path_refined,
    solve_with_stats,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_ABSENT = 3


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(doc, indent=2, sort_keys=True))
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avoidablepaths",
        description="find and verify avoidable induced paths in graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", help="run the solver on a graph file")
    _add_input_args(p)
    p.add_argument("--k", type=int, required=True, help="path length in vertices")
    p.add_argument(
        "--refined",
        type=int,
        default=None,
        metavar="U",
        help="search outside the closed neighbourhood of vertex U",
    )
    p.set_defaults(handler=_cmd_find)

    p = sub.add_parser("verify", help="check a stated path for avoidability")
    _add_input_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--path", required=True, help="comma-separated vertex ids, e.g. 0,1,2"
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "exhaustive", help="verify the solver over all small labeled graphs"
    )
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_exhaustive)

    p = sub.add_parser(
        "counterexample",
        help="emit the cycle-plus-apex family member for a given length",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--output", default=None, help="also write an edge-list file")
    p.set_defaults(handler=_cmd_counterexample)

    p = sub.add_parser(
        "two-nonadjacent", help="find two non-adjacent avoidable paths"
    )
    _add_input_args(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_two_nonadjacent)

    p = sub.add_parser("bench", help="time the solver on a generated family")
    p.add_argument(
        "--family", choices=("gnp", "cycle", "chordal"), required=True
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--p", type=float, default=0.5, help="edge probability for gnp")
    p.set_defaults(handler=_cmd_bench)

    return parser


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="edge-list or graph6 file")
    p.add_argument(
        "--format",
        choices=("auto", "edgelist", "graph6"),
        default="auto",
        help="input format (default: sniff)",
    )


# ----------------------------------------------------------------------
# shared payload helpers


def _load_single_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    graphs, warnings, _ = load_graphs(text, fmt)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if not graphs:
        raise ValueError(f"{path}: no graph records found")
    if len(graphs) > 1:
        print(
            f"warning: {path} holds {len(graphs)} graphs; using the first",
            file=sys.stderr,
        )
    return graphs[0]


def _input_payload(G: Graph) -> dict:
    canonical = serialize_edge_list(G)
    return {
        "digest": hashlib.sha256(canonical.encode("utf-8")).hexdigest(),
        "n": G.n,
        "edge_count": G.edge_count(),
    }


def _stats_payload(stats: SolveStats) -> dict:
    return {
        "merges": stats.merges,
        "refined_calls": stats.refined_calls,
        "induced_path_calls": stats.induced_path_calls,
        "max_depth": stats.max_depth,
    }


def _extension_payload(ext: Extension) -> dict:
    return {"x": ext.x, "core": list(ext.core), "y": ext.y}


def _verdict_payload(verdict: Verdict) -> dict:
    if verdict.avoidable:
        return {
            "avoidable": True,
            "no_extensions": not verdict.completions,
            "extensions": [
                {**_extension_payload(ext), "completing_cycle": list(cyc)}
                for ext, cyc in verdict.completions
            ],
        }
    return {
        "avoidable": False,
        "failing_extension": _extension_payload(verdict.failing),
    }


def _solve_payload(G: Graph, result: SolveResult) -> dict:
    if result.path is not None:
        return {
            "outcome": "avoidable_path",
            "path": list(result.path),
            "witness": _verdict_payload(check_avoidable(G, result.path)),
            "stats": _stats_payload(result.stats),
        }
    return {
        "outcome": "pk_free",
        "certified": {
            "scope": result.pk_free_scope,
            "vertex": result.pk_free_vertex,
        },
        "stats": _stats_payload(result.stats),
    }


# ----------------------------------------------------------------------
# commands


def _cmd_find(args) -> tuple[dict, int]:
    G = _load_single_graph(args.input, args.format)
    if args.refined is not None:
        result = find_avoidable_path_refined(G, args.k, args.refined)
    else:
        result = find_avoidable_path(G, args.k)
    doc = {"command": "find", "k": args.k, "input": _input_payload(G)}
    doc.update(_solve_payload(G, result))
    return doc, EXIT_OK if result.path is not None else EXIT_ABSENT


def _cmd_verify(args) -> tuple[dict, int]:
    G = _load_single_graph(args.input, args.format)
    try:
        path = tuple(int(tok) for tok in args.path.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"cannot parse path {args.path!r}") from None
    if len(path) != args.k:
        raise ValueError(f"--k {args.k} disagrees with a path on {len(path)} vertices")
    if not G.is_induced_path(path):
        raise ValueError(f"{list(path)} is not an induced path of the input graph")
    verdict = check_avoidable(G, path)
    doc = {
        "command": "verify",
        "k": args.k,
        "input": _input_payload(G),
        "outcome": "avoidable" if verdict.avoidable else "not_avoidable",
        "path": list(path),
        "witness": _verdict_payload(verdict),
    }
    return doc, EXIT_OK if verdict.avoidable else EXIT_ABSENT


def _cmd_exhaustive(args) -> tuple[dict, int]:
    if args.max_n > MAX_ENUMERATION_N:
        raise ValueError(f"--max-n is capped at {MAX_ENUMERATION_N}")
    report = check_all_graphs(args.max_n, args.max_k, jobs=max(1, args.jobs))
    doc = {
        "command": "exhaustive",
        "outcome": "report",
        "max_n": report.max_n,
        "max_k": report.max_k,
        "graphs_checked": report.graphs_checked,
        "graphs_per_n": {str(n): c for n, c in report.graphs_per_n.items()},
        "solves": report.solves,
        "avoidable_outcomes": report.avoidable_outcomes,
        "pk_free_outcomes": report.pk_free_outcomes,
        "violations": report.violations,
    }
    return doc, EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_counterexample(args) -> tuple[dict, int]:
    G = counterexample_graph(args.k)
    doc = {
        "command": "counterexample",
        "k": args.k,
        "outcome": "graph",
        "n": G.n,
        "edges": [list(e) for e in G.edges()],
        "apex": G.n - 1,
    }
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(serialize_edge_list(G))
        doc["output"] = args.output
    code = EXIT_OK
    if args.verify:
        if args.k > 6:
            raise ValueError("--verify is desk-scale only (k <= 6)")
        report = verify_counterexample(args.k)
        doc["verified"] = {
            "has_two_disjoint_pk": report.has_two_disjoint_pk,
            "has_two_disjoint_avoidable": report.has_two_disjoint_avoidable,
            "disjoint_pk_pair": [list(p) for p in report.pk_pair]
            if report.pk_pair
            else None,
        }
        if not (report.has_two_disjoint_pk and not report.has_two_disjoint_avoidable):
            code = EXIT_VIOLATION
    return doc, code


def _cmd_two_nonadjacent(args) -> tuple[dict, int]:
    G = _load_single_graph(args.input, args.format)
    pair = find_two_nonadjacent_avoidable(G, args.k)
    doc = {"command": "two-nonadjacent", "k": args.k, "input": _input_payload(G)}
    if pair is None:
        doc["outcome"] = "none"
        return doc, EXIT_ABSENT
    first, second = pair
    doc["outcome"] = "pair"
    doc["paths"] = [list(first), list(second)]
    doc["witnesses"] = [
        _verdict_payload(check_avoidable(G, first)),
        _verdict_payload(check_avoidable(G, second)),
    ]
    return doc, EXIT_OK


def _cmd_bench(args) -> tuple[dict, int]:
    if args.family == "cycle":
        G = make_cycle(args.n)
    else:
        if args.seed is None:
            raise ValueError(f"--seed is required for the {args.family} family")
        if args.family == "gnp":
            G = gnp(args.n, args.p, args.seed)
        else:
            G = random_chordal(args.n, args.seed)
    start = time.perf_counter()
    result = solve_with_stats(G, args.k)
    elapsed = time.perf_counter() - start
    stats = result.stats
    bounds_ok = stats.merges <= max(0, G.n - 1) and stats.refined_calls <= G.n
    doc = {
        "command": "bench",
        "outcome": "bench",
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "seed": args.seed,
        "p": args.p if args.family == "gnp" else None,
        "input": _input_payload(G),
        "wall_time_s": elapsed,
        "result": "avoidable_path" if result.path is not None else "pk_free",
        "path": list(result.path) if result.path is not None else None,
        "stats": _stats_payload(stats),
        "bounds_ok": bounds_ok,
    }
    return doc, EXIT_OK if bounds_ok else EXIT_VIOLATION


if __name__ == "__main__":
    raise SystemExit(main())
