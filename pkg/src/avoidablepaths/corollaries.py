"""Derived constructions: avoidable paths outside a connected set, pairs of
non-adjacent avoidable paths, and the disjoint-pair counterexample family.

Contracting a connected vertex set to a single vertex turns "find an
avoidable path outside ``N[X]``" into a pivoted solver call, because the
contracted vertex's closed neighbourhood is exactly ``N[X]`` and merges
preserve avoidability of paths found outside them.  Running that twice,
the second time around the first answer, yields two avoidable paths with
no vertex or edge between them whenever the graph has two non-adjacent
induced paths of the requested length at all.

Vertex-disjointness is genuinely weaker: for every ``k >= 3`` the graph
made of a ``(2k-1)``-cycle plus an apex joined to two consecutive cycle
vertices contains two disjoint induced paths on ``k`` vertices but never
two disjoint *avoidable* ones, and ``verify_counterexample`` re-derives
both facts by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .avoidability import check_avoidable
from .graphs import Graph, mask_of
from .paths import enumerate_induced_paths, find_induced_path
from .solver import SolveResult, find_avoidable_path_refined

__all__ = [
    "DisjointReport",
    "contract_connected_set",
    "find_avoidable_outside",
    "find_two_nonadjacent_avoidable",
    "counterexample_graph",
    "verify_counterexample",
]


@dataclass(frozen=True)
class DisjointReport:
    """Brute-force census of disjoint path pairs in one graph."""

    has_two_disjoint_pk: bool
    has_two_disjoint_avoidable: bool
    pk_pair: tuple[tuple[int, ...], tuple[int, ...]] | None
    avoidable_pair: tuple[tuple[int, ...], tuple[int, ...]] | None


def contract_connected_set(G: Graph, X) -> tuple[Graph, int]:
    """Contract the connected set ``X`` to its least vertex by repeated
    merging and return ``(contracted graph, surviving id)``.

    Merges follow a spanning tree of the induced subgraph on ``X`` built
    from ascending edge ids; leaves merge into their unique tree neighbour,
    ascending, until only the root remains.  Raises ``ValueError`` when
    ``X`` is empty or does not induce a connected subgraph.
    """
    xs = sorted(set(X))
    if not xs:
        raise ValueError("cannot contract the empty set")
    for v in xs:
        G._require_active(v)
    if len(xs) == 1:
        return G, xs[0]

    # spanning tree, Kruskal over ascending (u, v) pairs
    parent = {v: v for v in xs}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree: dict[int, set[int]] = {v: set() for v in xs}
    count = 0
    for i, u in enumerate(xs):
        for v in xs[i + 1 :]:
            if not G.has_edge(u, v):
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                tree[u].add(v)
                tree[v].add(u)
                count += 1
    if count != len(xs) - 1:
        raise ValueError("vertex set does not induce a connected subgraph")

    root = xs[0]
    g = G
    remaining = set(xs)
    while len(remaining) > 1:
        for v in sorted(remaining):
            if v == root:
                continue
            live = [w for w in tree[v] if w in remaining]
            if len(live) == 1:
                g = g.merge_vertices(live[0], v)
                remaining.discard(v)
                tree[live[0]].discard(v)
    return g, root


def find_avoidable_outside(G: Graph, X, k: int) -> SolveResult:
    """Find an avoidable path of the graph lying outside ``N[X]`` for a
    connected set ``X``, or certify that nothing outside ``N[X]`` holds an
    induced path on ``k`` vertices.  Contracts ``X`` and runs the pivoted
    solver at the contracted vertex."""
    if k < 1:
        raise ValueError("path length k must be >= 1")
    contracted, pivot = contract_connected_set(G, X)
    return find_avoidable_path_refined(contracted, k, pivot)


def find_two_nonadjacent_avoidable(
    G: Graph, k: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two avoidable induced paths on ``k`` vertices with no common vertex
    and no edge between them, or ``None`` when the graph does not even hold
    two non-adjacent induced paths of that length.

    Scans induced paths ``Q1`` in enumeration order until one leaves an
    induced path beyond ``N[Q1]``; the answer is then built by two
    :func:`find_avoidable_outside` calls, the second around the first's
    result.
    """
    if k < 1:
        raise ValueError("path length k must be >= 1")
    for q1 in enumerate_induced_paths(G, k):
        exterior = G.delete_closed_neighborhood(q1)
        if find_induced_path(exterior, k) is None:
            continue
        second = find_avoidable_outside(G, q1, k).path
        assert second is not None
        first = find_avoidable_outside(G, second, k).path
        assert first is not None
        return first, second
    return None


def counterexample_graph(k: int) -> Graph:
    """The ``2k``-vertex family member: cycle ``0..2k-2`` plus apex
    ``2k-1`` adjacent to cycle vertices ``0`` and ``1``.  Defined for
    ``k >= 3`` (for smaller ``k`` no such graph exists: two disjoint paths
    then force two disjoint avoidable ones)."""
    if k < 3:
        raise ValueError("the counterexample family needs k >= 3")
    m = 2 * k - 1
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m, 0), (m, 1)]
    return Graph.build(2 * k, edges)


def _first_disjoint_pair(paths: list[tuple[int, ...]]):
    masks = [mask_of(p) for p in paths]
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            if masks[i] & masks[j] == 0:
                return paths[i], paths[j]
    return None


def verify_counterexample(k: int) -> DisjointReport:
    """Brute-force census over the family member for ``k``: it must contain
    two vertex-disjoint induced paths on ``k`` vertices but no two disjoint
    avoidable ones."""
    G = counterexample_graph(k)
    all_paths = list(enumerate_induced_paths(G, k))
    avoidable = [p for p in all_paths if check_avoidable(G, p).avoidable]
    pk_pair = _first_disjoint_pair(all_paths)
    avoidable_pair = _first_disjoint_pair(avoidable)
    return DisjointReport(
        has_two_disjoint_pk=pk_pair is not None,
        has_two_disjoint_avoidable=avoidable_pair is not None,
        pk_pair=pk_pair,
        avoidable_pair=avoidable_pair,
    )
