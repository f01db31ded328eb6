"""Merge-and-recurse search for an avoidable induced path of a given length.

Two mutually recursive procedures, run as one explicit loop.  The basic
entry point scans vertices ``u`` in ascending order; as soon as deleting
``N[u]`` still leaves an induced path of the requested length it hands
over to the restricted variant pivoted at ``u``, and if no vertex
qualifies it returns any induced path of the graph itself, which is then
avoidable because every such path dominates all vertices.  The restricted
variant merges its pivot with any neighbour ``v`` that keeps an induced
path clear of ``N[{u, v}]`` and continues on the merged graph (the pivot
keeps its id), falling back to the basic scan on the graph without
``N[u]`` once no neighbour qualifies; at that point every induced path
outside ``N[u]`` dominates ``N(u)``, which makes the returned path
avoidable in the caller's graph as well, link by link down the merge
chain.

Both procedures end every branch in a tail call, so the driver below is a
plain state machine and merge chains never touch the interpreter's
recursion limit.  Because merged pivots keep their id and the result
avoids the pivot's closed neighbourhood, returned paths consist of
original vertex ids and need no translation.  All searches run on views;
the input graph is never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, bits
from .paths import find_induced_path

__all__ = [
    "PK_FREE_GRAPH",
    "PK_FREE_OUTSIDE",
    "SolveStats",
    "SolveResult",
    "find_avoidable_path",
    "find_avoidable_path_refined",
    "solve_with_stats",
]

PK_FREE_GRAPH = "graph"
PK_FREE_OUTSIDE = "graph_minus_closed_neighborhood"


@dataclass
class SolveStats:
    """Search-effort counters.

    ``merges`` equals the number of pivot merges (the depth of the
    restricted recursion); ``max_depth`` counts graph-shrinking descents,
    so it never exceeds the initial active vertex count.
    """

    merges: int = 0
    refined_calls: int = 0
    induced_path_calls: int = 0
    max_depth: int = 0


@dataclass(frozen=True)
class SolveResult:
    """Either an avoidable path certificate or a freeness certificate.

    ``path`` holds the avoidable path when one was found.  Otherwise
    ``pk_free_scope`` says which graph is certified free of induced paths
    of the requested length: the input graph itself (:data:`PK_FREE_GRAPH`)
    or the input minus ``N[pk_free_vertex]`` (:data:`PK_FREE_OUTSIDE`).
    """

    path: tuple[int, ...] | None
    pk_free_scope: str | None
    pk_free_vertex: int | None
    stats: SolveStats = field(repr=False, default_factory=SolveStats)

    @property
    def is_pk_free(self) -> bool:
        return self.path is None


def find_avoidable_path(G: Graph, k: int) -> SolveResult:
    """Return an avoidable induced path on ``k`` vertices, or certify that
    the graph has no induced path on ``k`` vertices at all."""
    if k < 1:
        raise ValueError("path length k must be >= 1")
    stats = SolveStats()
    result = _solve(G, k, stats, pivot=None)
    _check_bounds(G.active_count(), stats)
    return result


def find_avoidable_path_refined(G: Graph, k: int, u: int) -> SolveResult:
    """Return an avoidable path of the graph lying outside ``N[u]`` (outside
    the closed neighbourhood of everything merged into ``u`` along the way),
    or certify that the graph minus ``N[u]`` has no induced path on ``k``
    vertices."""
    if k < 1:
        raise ValueError("path length k must be >= 1")
    G._require_active(u)
    stats = SolveStats()
    result = _solve(G, k, stats, pivot=u)
    _check_bounds(G.active_count(), stats)
    return result


def solve_with_stats(G: Graph, k: int) -> SolveResult:
    """Instrumented entry point; identical to :func:`find_avoidable_path`,
    named for callers that consume the statistics."""
    return find_avoidable_path(G, k)


def _solve(G: Graph, k: int, stats: SolveStats, pivot: int | None) -> SolveResult:
    """Driver for both procedures: ``pivot=None`` starts in the basic scan,
    otherwise in the restricted scan at that pivot.

    A freeness outcome can only surface when the entry was restricted and
    its exterior held no path to begin with (any merge or basic-scan hit
    would have guaranteed a path down the chain), so the certificate
    always names the entry pivot.
    """
    entry_pivot = pivot
    depth = 0
    while True:
        if depth > stats.max_depth:
            stats.max_depth = depth
        act = G.active_mask
        adj = G._adj

        if pivot is None:
            # basic scan: find a vertex whose removal with its
            # neighbourhood still leaves a path of the wanted length
            for u in bits(act):
                outside = act & ~((adj[u] & act) | (1 << u))
                stats.induced_path_calls += 1
                if find_induced_path(Graph(G.n, adj, outside), k) is not None:
                    pivot = u  # hand over at the same depth
                    break
            else:
                stats.induced_path_calls += 1
                p = find_induced_path(G, k)
                if p is not None:
                    return SolveResult(p, None, None, stats)
                if entry_pivot is not None:
                    return SolveResult(None, PK_FREE_OUTSIDE, entry_pivot, stats)
                return SolveResult(None, PK_FREE_GRAPH, None, stats)
            continue

        # restricted scan at the pivot
        stats.refined_calls += 1
        ub = 1 << pivot
        merged = None
        for v in bits(adj[pivot] & act):
            outside = act & ~(((adj[pivot] | adj[v]) & act) | ub | (1 << v))
            stats.induced_path_calls += 1
            if find_induced_path(Graph(G.n, adj, outside), k) is not None:
                merged = G.merge_vertices(pivot, v)
                break
        if merged is not None:
            stats.merges += 1
            G = merged  # pivot id survives the merge
            depth += 1
        else:
            G = Graph(G.n, adj, act & ~((adj[pivot] & act) | ub))
            pivot = None
            depth += 1


def _check_bounds(n0: int, stats: SolveStats) -> None:
    # structural bounds: each merge kills one vertex, and consecutive
    # restricted calls always act on strictly smaller graphs
    assert stats.merges <= max(0, n0 - 1), (stats, n0)
    assert stats.refined_calls <= n0, (stats, n0)
    assert stats.max_depth <= n0, (stats, n0)
