"""Immutable bitmask graphs with id-stable views and vertex merging.

Vertices are the dense ids ``0..n-1``.  Adjacency rows and the set of
active (alive) vertices are plain Python ints used as bitmasks, which keeps
the neighbourhood algebra everything else leans on (unions, complements,
subset tests) cheap and allocation-free.

Two structural rules hold everywhere:

* Deleting vertices produces a *view*: adjacency rows are shared and only
  the active mask shrinks, so a surviving id keeps meaning the same vertex.
* Merging two adjacent vertices produces a new graph in which the merged
  vertex keeps the first argument's id and inherits both neighbourhoods.

All queries ignore inactive vertices, and all iteration over vertex sets is
in ascending id order, so every operation is deterministic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

__all__ = ["Graph", "bits", "mask_of", "vertex_pairs"]


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All unordered pairs over ``0..n-1`` in the fixed order
    ``(0,1), (0,2), ..., (0,n-1), (1,2), ...`` used by edge masks and the
    seeded random-graph stream."""
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


class Graph:
    """A finite simple loopless graph over dense integer vertex ids.

    Instances are immutable.  ``n`` is the size of the id space; ``active``
    masks the vertices a view exposes (all of them for a freshly built
    graph).  Use :meth:`build` or :meth:`from_edge_mask` instead of the
    constructor, which trusts its arguments.
    """

    __slots__ = ("n", "_adj", "_active")

    def __init__(self, n: int, adj: tuple[int, ...], active: int):
        self.n = n
        self._adj = adj
        self._active = active

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        """Build a graph on vertices ``0..n-1`` from an edge list.

        Duplicate edges collapse silently; an endpoint out of range or a
        self-loop raises ``ValueError``.
        """
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {(u, v)!r}")
            if u == v:
                raise ValueError(f"self-loop not allowed: {(u, v)!r}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), (1 << n) - 1)

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        """Decode an edge bitmask over :func:`vertex_pairs` order."""
        pairs = vertex_pairs(n)
        if not 0 <= mask < (1 << len(pairs)):
            raise ValueError("edge mask out of range")
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            m ^= low
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), (1 << n) - 1)

    # ------------------------------------------------------------------
    # basic queries (all filtered to active vertices)

    @property
    def active_mask(self) -> int:
        return self._active

    def active_count(self) -> int:
        return self._active.bit_count()

    def is_active(self, v: int) -> bool:
        return 0 <= v < self.n and (self._active >> v) & 1 == 1

    def vertices(self) -> list[int]:
        return list(bits(self._active))

    def adj_mask(self, v: int) -> int:
        """Active neighbours of ``v`` as a bitmask."""
        return self._adj[v] & self._active

    def neighbors(self, v: int) -> list[int]:
        self._require_active(v)
        return list(bits(self._adj[v] & self._active))

    def degree(self, v: int) -> int:
        self._require_active(v)
        return (self._adj[v] & self._active).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (
            self.is_active(u)
            and self.is_active(v)
            and (self._adj[u] >> v) & 1 == 1
        )

    def edges(self) -> list[tuple[int, int]]:
        """Active edges as ``(u, v)`` with ``u < v``, lexicographically."""
        act = self._active
        out = []
        for u in bits(act):
            higher = self._adj[u] & act & ~((1 << (u + 1)) - 1)
            for v in bits(higher):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        act = self._active
        return sum((self._adj[u] & act).bit_count() for u in bits(act)) // 2

    # ------------------------------------------------------------------
    # neighbourhood algebra

    def closed_neighborhood_mask(self, xmask: int) -> int:
        nb = xmask
        for v in bits(xmask):
            nb |= self._adj[v]
        return nb & self._active

    def closed_neighborhood(self, X: Iterable[int]) -> set[int]:
        """``N[X]``: the members of ``X`` together with their active
        neighbours.  Every member of ``X`` must be active."""
        xmask = self._validated_mask(X)
        return set(bits(self.closed_neighborhood_mask(xmask)))

    def open_neighborhood(self, X: Iterable[int]) -> set[int]:
        """``N(X) = N[X] \\ X``."""
        xmask = self._validated_mask(X)
        return set(bits(self.closed_neighborhood_mask(xmask) & ~xmask))

    def dominates(self, X: Iterable[int], Y: Iterable[int]) -> bool:
        """True iff every vertex of ``Y`` not in ``X`` has a neighbour in
        ``X`` (equivalently ``Y`` is contained in ``N[X]``)."""
        xmask = self._validated_mask(X)
        ymask = self._validated_mask(Y)
        return ymask & ~self.closed_neighborhood_mask(xmask) == 0

    # ------------------------------------------------------------------
    # views and merging

    def delete_vertices(self, X: Iterable[int]) -> Graph:
        """View of the graph without the vertices of ``X``."""
        xmask = self._validated_mask(X)
        return Graph(self.n, self._adj, self._active & ~xmask)

    def delete_closed_neighborhood(self, X: Iterable[int]) -> Graph:
        """View of the graph without ``N[X]``; surviving ids unchanged."""
        xmask = self._validated_mask(X)
        return Graph(
            self.n, self._adj, self._active & ~self.closed_neighborhood_mask(xmask)
        )

    def merge_vertices(self, u1: int, u2: int) -> Graph:
        """Merge adjacent ``u1`` and ``u2``: the survivor keeps id ``u1``
        and its neighbourhood becomes ``N({u1, u2})``; ``u2`` goes inactive.

        The active count drops by exactly one.  Raises ``ValueError`` when
        the arguments are inactive or non-adjacent.
        """
        self._require_active(u1)
        self._require_active(u2)
        if not (self._adj[u1] >> u2) & 1 or u1 == u2:
            raise ValueError(f"can only merge adjacent vertices, got {u1} and {u2}")
        b1, b2 = 1 << u1, 1 << u2
        new_active = self._active & ~b2
        union = ((self._adj[u1] | self._adj[u2]) & new_active) & ~b1
        rows = [0] * self.n
        for v in bits(new_active):
            if v == u1:
                rows[v] = union
            else:
                row = self._adj[v] & new_active & ~b1
                if (union >> v) & 1:
                    row |= b1
                rows[v] = row
        return Graph(self.n, tuple(rows), new_active)

    # ------------------------------------------------------------------
    # paths and cycles

    def is_induced_path(self, seq: Iterable[int]) -> bool:
        """True iff ``seq`` lists distinct active vertices where consecutive
        pairs are adjacent and no other pair is.  A singleton is a path; the
        empty sequence is not."""
        seq = list(seq)
        if not seq:
            return False
        seen = 0
        for v in seq:
            if not self.is_active(v) or (seen >> v) & 1:
                return False
            seen |= 1 << v
        for i, u in enumerate(seq):
            row = self._adj[u]
            for j in range(i + 1, len(seq)):
                if ((row >> seq[j]) & 1) != (1 if j == i + 1 else 0):
                    return False
        return True

    def is_induced_cycle(self, seq: Iterable[int]) -> bool:
        """True iff ``seq`` lists the vertices of an induced cycle in cyclic
        order (length at least three, consecutive pairs adjacent cyclically,
        all other pairs non-adjacent)."""
        seq = list(seq)
        if len(seq) < 3:
            return False
        seen = 0
        for v in seq:
            if not self.is_active(v) or (seen >> v) & 1:
                return False
            seen |= 1 << v
        m = len(seq)
        for i, u in enumerate(seq):
            row = self._adj[u]
            for j in range(i + 1, m):
                adjacent = (row >> seq[j]) & 1
                consecutive = j == i + 1 or (i == 0 and j == m - 1)
                if adjacent != (1 if consecutive else 0):
                    return False
        return True

    def connecting_path(
        self, x: int, y: int, forbidden: Iterable[int] = ()
    ) -> list[int] | None:
        """A shortest path from ``x`` to ``y`` avoiding ``forbidden``, or
        ``None`` if they are disconnected there.  Shortest paths are induced
        in the view that drops ``forbidden``."""
        fmask = self._validated_mask(forbidden)
        self._require_active(x)
        self._require_active(y)
        if (fmask >> x) & 1 or (fmask >> y) & 1:
            raise ValueError("endpoints may not be forbidden")
        return self._bfs_path(x, y, self._active & ~fmask)

    def _bfs_path(self, x: int, y: int, allowed: int) -> list[int] | None:
        """Breadth-first shortest path inside ``allowed`` (which must contain
        both endpoints); deterministic by ascending-id expansion."""
        if x == y:
            return [x]
        adj = self._adj
        parent = {x: -1}
        seen = 1 << x
        frontier = [x]
        while frontier:
            nxt = []
            for v in frontier:
                fresh = adj[v] & allowed & ~seen
                if fresh:
                    seen |= fresh
                    for w in bits(fresh):
                        parent[w] = v
                        if w == y:
                            path = [y]
                            while path[-1] != x:
                                path.append(parent[path[-1]])
                            path.reverse()
                            return path
                        nxt.append(w)
            frontier = nxt
        return None

    # ------------------------------------------------------------------
    # bookkeeping

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` unless the stored structure is a simple
        loopless symmetric graph on the active set."""
        act = self._active
        assert 0 <= act < (1 << self.n)
        for v in bits(act):
            row = self._adj[v] & act
            assert (row >> v) & 1 == 0, f"loop at {v}"
            for w in bits(row):
                assert (self._adj[w] >> v) & 1, f"asymmetric edge {v}-{w}"

    def _require_active(self, v: int) -> None:
        if not self.is_active(v):
            raise ValueError(f"vertex {v} is not an active vertex of this graph")

    def _validated_mask(self, X: Iterable[int]) -> int:
        m = mask_of(X)
        if m < 0 or m & ~self._active:
            bad = m & ~self._active
            raise ValueError(
                f"vertex set contains inactive or out-of-range vertices: mask {bad:#x}"
            )
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n or self._active != other._active:
            return False
        act = self._active
        return all(self._adj[v] & act == other._adj[v] & act for v in bits(act))

    def __hash__(self) -> int:
        act = self._active
        return hash((self.n, act, tuple(self._adj[v] & act for v in bits(act))))

    def __repr__(self) -> str:
        return (
            f"Graph(n={self.n}, active={self.active_count()}, "
            f"edges={self.edges()!r})"
        )
