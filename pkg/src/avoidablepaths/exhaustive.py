"""Exhaustive verification of the solver over all small labeled graphs.

For every labeled graph up to a given order and every path length up to a
given bound, the solver must either produce a path that the avoidability
checker confirms, or certify freeness that the subset existence oracle
confirms.  The graph index range partitions cleanly (a graph is just an
edge mask), so the census can fan out over a process pool; chunk results
merge by addition and concatenation, making the aggregate independent of
the partition.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .avoidability import check_avoidable
from .generators import MAX_ENUMERATION_N
from .graphs import Graph, vertex_pairs
from .paths import subset_has_induced_path
from .solver import find_avoidable_path

__all__ = ["ExhaustiveReport", "check_all_graphs"]

_CHUNK = 4096


@dataclass
class ExhaustiveReport:
    max_n: int
    max_k: int
    graphs_checked: int = 0
    solves: int = 0
    avoidable_outcomes: int = 0
    pk_free_outcomes: int = 0
    graphs_per_n: dict[int, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_chunk(args: tuple[int, int, int, int]) -> dict:
    """Verify graphs with edge masks in ``[lo, hi)`` on ``n`` vertices."""
    n, max_k, lo, hi = args
    checked = solves = avoidable = pk_free = 0
    violations: list[dict] = []
    for mask in range(lo, hi):
        G = Graph.from_edge_mask(n, mask)
        checked += 1
        for k in range(1, min(n, max_k) + 1):
            solves += 1
            result = find_avoidable_path(G, k)
            if result.path is not None:
                avoidable += 1
                problem = None
                if len(result.path) != k:
                    problem = "returned path has the wrong length"
                elif not G.is_induced_path(result.path):
                    problem = "returned sequence is not an induced path"
                elif not check_avoidable(G, result.path).avoidable:
                    problem = "returned path is not avoidable"
                if problem:
                    violations.append(
                        {"n": n, "edge_mask": mask, "k": k, "problem": problem}
                    )
            else:
                pk_free += 1
                if subset_has_induced_path(G, k):
                    violations.append(
                        {
                            "n": n,
                            "edge_mask": mask,
                            "k": k,
                            "problem": "freeness certificate contradicted by subset oracle",
                        }
                    )
    return {
        "checked": checked,
        "solves": solves,
        "avoidable": avoidable,
        "pk_free": pk_free,
        "violations": violations,
    }


def check_all_graphs(max_n: int, max_k: int, jobs: int = 1) -> ExhaustiveReport:
    """Run the census for every ``n <= max_n`` and ``k <= min(n, max_k)``."""
    if max_n < 1 or max_k < 1:
        raise ValueError("max_n and max_k must be >= 1")
    if max_n > MAX_ENUMERATION_N:
        raise ValueError(f"refusing to enumerate beyond n = {MAX_ENUMERATION_N}")
    report = ExhaustiveReport(max_n=max_n, max_k=max_k)
    tasks = []
    for n in range(1, max_n + 1):
        total = 1 << len(vertex_pairs(n))
        report.graphs_per_n[n] = total
        for lo in range(0, total, _CHUNK):
            tasks.append((n, max_k, lo, min(lo + _CHUNK, total)))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_check_chunk, tasks)
    else:
        results = [_check_chunk(t) for t in tasks]
    for res in results:
        report.graphs_checked += res["checked"]
        report.solves += res["solves"]
        report.avoidable_outcomes += res["avoidable"]
        report.pk_free_outcomes += res["pk_free"]
        report.violations.extend(res["violations"])
    return report
