"""Induced path search: depth-first extension with chord pruning.

Enumeration grows a partial induced path vertex by vertex, discarding any
candidate adjacent to a non-tip vertex of the partial path, so every full
sequence it emits is an induced path with no further checking.  Each path
appears exactly once, oriented so its first id is smaller than its last,
and the stream is in ascending lexicographic order of the vertex
sequences.  ``subset_has_induced_path`` is a deliberately separate
existence oracle used to cross-check the search.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graphs import Graph, bits, mask_of

__all__ = [
    "enumerate_induced_paths",
    "find_induced_path",
    "subset_has_induced_path",
]


def enumerate_induced_paths(G: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every induced path on ``k`` vertices, canonically oriented
    (first id < last id for ``k >= 2``), in lexicographic order."""
    if k < 1:
        raise ValueError("path length k must be >= 1")
    act = G.active_mask
    if k == 1:
        for v in bits(act):
            yield (v,)
        return
    if act.bit_count() < k:
        return
    adj = G._adj
    path = [0] * k
    cand = [act] + [0] * (k - 1)
    blocked = [0] * k
    depth = 0
    while depth >= 0:
        c = cand[depth]
        if not c:
            depth -= 1
            continue
        low = c & -c
        cand[depth] = c ^ low
        v = low.bit_length() - 1
        path[depth] = v
        if depth == k - 1:
            if path[0] < v:
                yield tuple(path)
            continue
        if depth == 0:
            nb = low
        else:
            nb = blocked[depth] | low | (adj[path[depth - 1]] & act)
        blocked[depth + 1] = nb
        cand[depth + 1] = adj[v] & act & ~nb
        depth += 1


def find_induced_path(G: Graph, k: int) -> tuple[int, ...] | None:
    """First induced path on ``k`` vertices in enumeration order, or
    ``None`` when the graph has none (in particular when ``k`` exceeds the
    active vertex count)."""
    return next(enumerate_induced_paths(G, k), None)


def subset_has_induced_path(G: Graph, k: int) -> bool:
    """Existence oracle independent of the DFS: scan every ``k``-subset of
    active vertices and accept iff one induces a path.

    A subset induces a path iff its induced degrees are two ones and
    ``k - 2`` twos and the subset is connected (for ``k >= 2``; any single
    vertex counts for ``k = 1``).  Exponential; verification scale only.
    """
    if k < 1:
        raise ValueError("path length k must be >= 1")
    verts = G.vertices()
    if k == 1:
        return bool(verts)
    if k > len(verts):
        return False
    adj = G._adj
    for combo in combinations(verts, k):
        m = mask_of(combo)
        ones = 0
        for v in combo:
            d = (adj[v] & m).bit_count()
            if d == 1:
                ones += 1
            elif d != 2:
                ones = -1
                break
        if ones != 2:
            continue
        # degree profile matches a path plus possibly separate cycles;
        # connectivity pins it down
        start = combo[0]
        seen = 1 << start
        frontier = seen
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v] & m & ~seen
            seen |= grow
            frontier = grow
        if seen == m:
            return True
    return False
