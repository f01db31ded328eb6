"""Avoidability of induced paths: extensions, failing tests, verdicts.

An *extension* of an induced path adds one new endpoint on each side so
that the whole sequence is again an induced path.  An extension *fails*
when no induced cycle of the graph contains it; a path is *avoidable* when
it is induced and none of its extensions fail (vacuously so when it has no
extension at all).

The failing test reduces to reachability: the extension ``x..y`` lies on an
induced cycle iff ``x`` and ``y`` remain connected after deleting the
closed neighbourhood of the path's interior while keeping ``x`` and ``y``
themselves.  A shortest connector found there cannot touch the interior
and has no chords, so stitching it to the extension closes an induced
cycle; conversely the off-path arc of any induced cycle through ``x..y``
is such a connector.  ``brute_force_is_failing`` re-decides the question
by enumerating all induced cycles outright and is the oracle the
reduction is validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graphs import Graph, bits, mask_of
from .paths import enumerate_induced_paths

__all__ = [
    "Extension",
    "Verdict",
    "enumerate_extensions",
    "find_completing_cycle",
    "is_failing",
    "brute_force_is_failing",
    "enumerate_induced_cycles",
    "check_avoidable",
    "enumerate_avoidable_paths",
]


@dataclass(frozen=True)
class Extension:
    """An induced path ``x · core · y`` grown from ``core`` by one new
    endpoint on each side."""

    x: int
    core: tuple[int, ...]
    y: int

    @property
    def sequence(self) -> tuple[int, ...]:
        return (self.x, *self.core, self.y)


@dataclass(frozen=True)
class Verdict:
    """Avoidability outcome with a checkable witness.

    ``avoidable`` carries one completing induced cycle per extension in
    ``completions`` (empty tuple when the path has no extension);
    otherwise ``failing`` is the first failing extension in enumeration
    order.
    """

    avoidable: bool
    completions: tuple[tuple[Extension, tuple[int, ...]], ...] | None = None
    failing: Extension | None = None


def enumerate_extensions(G: Graph, P: Sequence[int]) -> list[Extension]:
    """All extensions of the induced path ``P``, as ``(x, y)`` pairs with
    ``x`` attached to ``P[0]`` and ``y`` to ``P[-1]``, in ascending order
    of ``x`` then ``y``.

    For a single-vertex core the two orientations of an extension coincide,
    so only the pair with ``x < y`` is emitted.  Raises ``ValueError`` when
    ``P`` is not an induced path.
    """
    P = tuple(P)
    if not G.is_induced_path(P):
        raise ValueError(f"{P!r} is not an induced path of this graph")
    act = G.active_mask
    adj = G._adj
    pmask = mask_of(P)
    xm = adj[P[0]] & act & ~pmask
    ym = adj[P[-1]] & act & ~pmask
    for v in P[1:]:
        xm &= ~adj[v]
    for v in P[:-1]:
        ym &= ~adj[v]
    single = len(P) == 1
    out = []
    for x in bits(xm):
        ys = ym & ~adj[x] & ~(1 << x)
        if single:
            ys &= ~((1 << (x + 1)) - 1)
        for y in bits(ys):
            out.append(Extension(x, P, y))
    return out


def _validated_extension_sequence(G: Graph, ext: Extension) -> tuple[int, ...]:
    seq = ext.sequence
    if len(seq) < 3 or not G.is_induced_path(seq):
        raise ValueError(f"{ext!r} is not a valid extension in this graph")
    return seq


def find_completing_cycle(G: Graph, ext: Extension) -> tuple[int, ...] | None:
    """An induced cycle containing ``ext`` as a consecutive arc, or ``None``
    when the extension is failing.

    The cycle comes back as ``x, core..., y`` followed by the connector
    vertices from the ``y`` side around to the ``x`` side.
    """
    seq = _validated_extension_sequence(G, ext)
    interior = mask_of(ext.core)
    keep = (1 << ext.x) | (1 << ext.y)
    forbidden = G.closed_neighborhood_mask(interior) & ~keep
    connector = G._bfs_path(ext.x, ext.y, G.active_mask & ~forbidden)
    if connector is None:
        return None
    return seq + tuple(reversed(connector[1:-1]))


def is_failing(G: Graph, ext: Extension) -> bool:
    """True iff no induced cycle of the graph contains the extension."""
    return find_completing_cycle(G, ext) is None


def enumerate_induced_cycles(G: Graph) -> list[tuple[int, ...]]:
    """Every induced cycle, one tuple per cycle in cyclic order starting at
    its least vertex toward that vertex's smaller cycle neighbour.

    A subset of vertices carries an induced cycle iff all its induced
    degrees equal two and it is connected; the scan tries every subset, so
    keep this to verification-scale graphs (roughly a dozen vertices).
    """
    verts = G.vertices()
    adj = G._adj
    out = []
    for size in range(3, len(verts) + 1):
        for combo in combinations(verts, size):
            m = mask_of(combo)
            ok = True
            for v in combo:
                if (adj[v] & m).bit_count() != 2:
                    ok = False
                    break
            if not ok:
                continue
            # all degrees two: a disjoint union of cycles; walk to check it
            # is a single one and to recover the cyclic order
            start = combo[0]
            first = adj[start] & m
            first &= -first  # smaller neighbour
            order = [start, first.bit_length() - 1]
            while True:
                nxt = adj[order[-1]] & m & ~(1 << order[-2])
                v = nxt.bit_length() - 1
                if v == start:
                    break
                order.append(v)
            if len(order) == size:
                out.append(tuple(order))
    return out


def brute_force_is_failing(
    G: Graph, ext: Extension, cycles: list[tuple[int, ...]] | None = None
) -> bool:
    """Decide failing by exhaustive cycle enumeration: true iff no induced
    cycle contains ``x · core · y`` as a consecutive arc (in either
    direction).  ``cycles`` may carry a precomputed
    :func:`enumerate_induced_cycles` result for batch use."""
    seq = _validated_extension_sequence(G, ext)
    if cycles is None:
        cycles = enumerate_induced_cycles(G)
    smask = mask_of(seq)
    rseq = seq[::-1]
    L = len(seq)
    for cyc in cycles:
        if len(cyc) <= L:
            continue
        if smask & ~mask_of(cyc):
            continue
        doubled = cyc + cyc
        for i in range(len(cyc)):
            window = doubled[i : i + L]
            if window == seq or window == rseq:
                return False
    return True


def check_avoidable(G: Graph, P: Sequence[int]) -> Verdict:
    """Verdict for the induced path ``P``: avoidable with one completing
    cycle per extension, or not avoidable with the first failing extension
    as witness."""
    P = tuple(P)
    if not G.is_induced_path(P):
        raise ValueError(f"{P!r} is not an induced path of this graph")
    completions = []
    for ext in enumerate_extensions(G, P):
        cyc = find_completing_cycle(G, ext)
        if cyc is None:
            return Verdict(False, None, ext)
        completions.append((ext, cyc))
    return Verdict(True, tuple(completions), None)


def enumerate_avoidable_paths(G: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """The avoidable induced paths on ``k`` vertices, in the canonical
    enumeration order of :func:`enumerate_induced_paths`."""
    for P in enumerate_induced_paths(G, k):
        if check_avoidable(G, P).avoidable:
            yield P
