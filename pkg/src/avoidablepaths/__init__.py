"""Constructive search for avoidable induced paths in finite simple graphs.

An induced path is *avoidable* when every extension of it by one new
endpoint on each side lies on an induced cycle.  Whenever a graph contains
an induced path on ``k`` vertices it also contains an avoidable one, and
the solver here finds it by merging vertices and recursing, never by
enumerating candidates and testing them.  Everything the solver claims is
re-checkable: avoidability verdicts carry completing cycles or a failing
extension, freeness outcomes name the graph they certify, and independent
brute-force oracles cover both the failing test and path existence.
"""

from .avoidability import (
    Extension,
    Verdict,
    brute_force_is_failing,
    check_avoidable,
    enumerate_avoidable_paths,
    enumerate_extensions,
    enumerate_induced_cycles,
    find_completing_cycle,
    is_failing,
)
from .corollaries import (
    DisjointReport,
    contract_connected_set,
    counterexample_graph,
    find_avoidable_outside,
    find_two_nonadjacent_avoidable,
    verify_counterexample,
)
from .exhaustive import ExhaustiveReport, check_all_graphs
from .formats import (
    load_graphs,
    parse_edge_list,
    parse_edge_list_document,
    parse_graph6,
    parse_graph6_line,
    serialize_edge_list,
    to_graph6,
)
from .generators import (
    MAX_ENUMERATION_N,
    SplitMix64,
    all_labeled_graphs,
    gnp,
    is_chordal,
    make_complete,
    make_cycle,
    make_path,
    make_star,
    random_chordal,
)
from .graphs import Graph, bits, mask_of, vertex_pairs
from .paths import enumerate_induced_paths, find_induced_path, subset_has_induced_path
from .solver import (
    PK_FREE_GRAPH,
    PK_FREE_OUTSIDE,
    SolveResult,
    SolveStats,
    find_avoidable_path,
    find_avoidable_path_refined,
    solve_with_stats,
)

__version__ = "0.1.0"

__all__ = [
    "Extension",
    "Verdict",
    "brute_force_is_failing",
    "check_avoidable",
    "enumerate_avoidable_paths",
    "enumerate_extensions",
    "enumerate_induced_cycles",
    "find_completing_cycle",
    "is_failing",
    "DisjointReport",
    "contract_connected_set",
    "counterexample_graph",
    "find_avoidable_outside",
    "find_two_nonadjacent_avoidable",
    "verify_counterexample",
    "ExhaustiveReport",
    "check_all_graphs",
    "load_graphs",
    "parse_edge_list",
    "parse_edge_list_document",
    "parse_graph6",
    "parse_graph6_line",
    "serialize_edge_list",
    "to_graph6",
    "MAX_ENUMERATION_N",
    "SplitMix64",
    "all_labeled_graphs",
    "gnp",
    "is_chordal",
    "make_complete",
    "make_cycle",
    "make_path",
    "make_star",
    "random_chordal",
    "Graph",
    "bits",
    "mask_of",
    "vertex_pairs",
    "enumerate_induced_paths",
    "find_induced_path",
    "subset_has_induced_path",
    "PK_FREE_GRAPH",
    "PK_FREE_OUTSIDE",
    "SolveResult",
    "SolveStats",
    "find_avoidable_path",
    "find_avoidable_path_refined",
    "solve_with_stats",
]
