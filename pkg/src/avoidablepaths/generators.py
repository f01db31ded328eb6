"""Deterministic graph constructors and enumerators for tests and benchmarks.

Randomised constructors take an explicit 64-bit seed and draw from a fixed
splitmix64 stream in a fixed order, so a seed reproduces the same graph on
any platform; golden tests freeze the resulting edge lists, which remain
the durable source of truth for fixtures.
"""

from __future__ import annotations

from typing import Iterator

from .graphs import Graph, bits, vertex_pairs

__all__ = [
    "MAX_ENUMERATION_N",
    "SplitMix64",
    "make_path",
    "make_cycle",
    "make_complete",
    "make_star",
    "gnp",
    "random_chordal",
    "is_chordal",
    "all_labeled_graphs",
]

_MASK64 = (1 << 64) - 1

MAX_ENUMERATION_N = 7


class SplitMix64:
    """The splitmix64 generator: state advances by the 64-bit golden-ratio
    constant and each output is a xorshift-multiply mix of the state.
    ``random`` maps the top 53 bits to ``[0, 1)``; ``randrange`` reduces an
    output modulo the bound."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (2.0**-53)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        return self.next_u64() % n


def make_path(n: int) -> Graph:
    """The path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    """The cycle 0-1-...-(n-1)-0; needs ``n >= 3``."""
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph.build(n, vertex_pairs(n))


def make_star(n: int) -> Graph:
    """Star with centre 0 and ``n - 1`` leaves."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph.build(n, [(0, i) for i in range(1, n)])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Seeded binomial random graph: each pair is an edge independently
    with probability ``p``, drawn in :func:`vertex_pairs` order."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [pair for pair in vertex_pairs(n) if rng.random() < p]
    return Graph.build(n, edges)


def random_chordal(n: int, seed: int) -> Graph:
    """Seeded random chordal graph built by reverse perfect elimination:
    each new vertex attaches to a clique grown greedily from a random
    anchor among the earlier vertices (each compatible candidate joins
    with probability one half, scanned ascending)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = SplitMix64(seed)
    rows = [0] * n
    for i in range(1, n):
        anchor = rng.randrange(i)
        cmask = 1 << anchor
        for w in range(i):
            if w == anchor:
                continue
            if rows[w] & cmask == cmask and rng.random() < 0.5:
                cmask |= 1 << w
        rows[i] = cmask
        for w in bits(cmask):
            rows[w] |= 1 << i
    return Graph(n, tuple(rows), (1 << n) - 1)


def is_chordal(G: Graph) -> bool:
    """Greedy perfect-elimination test: repeatedly peel any vertex whose
    active neighbourhood is a clique; success iff everything peels."""
    act = G.active_mask
    adj = G._adj
    while act:
        for v in bits(act):
            m = adj[v] & act
            simplicial = True
            for w in bits(m):
                if m & ~(adj[w] | (1 << w)):
                    simplicial = False
                    break
            if simplicial:
                act &= ~(1 << v)
                break
        else:
            return False
    return True


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labeled graphs on ``n`` vertices in edge-mask
    order.  Guarded at ``n <= 7``; beyond that the census is no longer a
    desk-scale object."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"refusing to enumerate beyond n = {MAX_ENUMERATION_N}")
    pairs = len(vertex_pairs(n))
    for mask in range(1 << pairs):
        yield Graph.from_edge_mask(n, mask)
