"""File formats: the canonical edge-list documents and graph6.

Edge-list documents are UTF-8 text with LF line endings: a header line
``n m``, then exactly ``m`` lines ``u v`` with 0-indexed endpoints.  Lines
whose first non-blank character is ``#`` are comments; blank lines are
ignored.  The canonical serialization lists edges as ``u v`` with
``u < v`` in ascending lexicographic order, so parsing and serializing a
canonical document round-trips bit-exactly.  Duplicate edges parse with a
warning and collapse; self-loops, out-of-range endpoints and a body that
disagrees with the header are errors.

graph6 follows the de-facto standard: an optional ``>>graph6<<`` header,
a 6-bit size field (one byte up to 62 vertices, ``~`` + three bytes up to
258047, ``~~`` + six bytes beyond), then the upper triangle packed
column by column, six bits per byte, each byte offset by 63.  One graph
per line; trailing newlines are tolerated.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = [
    "parse_edge_list",
    "parse_edge_list_document",
    "serialize_edge_list",
    "parse_graph6_line",
    "parse_graph6",
    "to_graph6",
    "load_graphs",
]

GRAPH6_HEADER = ">>graph6<<"


# ----------------------------------------------------------------------
# edge-list documents


def parse_edge_list_document(text: str) -> tuple[Graph, list[str]]:
    """Parse an edge-list document; return the graph and parse warnings."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    warnings: list[str] = []
    body_lines = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: expected two integers, got {raw!r}"
            ) from None
        if header is None:
            if a < 0 or b < 0:
                raise ValueError(f"line {lineno}: negative count in header")
            header = (a, b)
            continue
        n, m = header
        body_lines += 1
        if body_lines > m:
            raise ValueError(
                f"line {lineno}: more edge lines than the header announced"
            )
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"line {lineno}: endpoint out of range: {a} {b}")
        if a == b:
            raise ValueError(f"line {lineno}: self-loop not allowed: {a} {b}")
        key = (min(a, b), max(a, b))
        if key in seen:
            warnings.append(f"line {lineno}: duplicate edge {a} {b} collapsed")
        else:
            seen.add(key)
            edges.append(key)
    if header is None:
        raise ValueError("missing 'n m' header line")
    n, m = header
    if body_lines != m:
        raise ValueError(f"header announced {m} edges but the body has {body_lines}")
    return Graph.build(n, edges), warnings


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document, discarding warnings."""
    graph, _ = parse_edge_list_document(text)
    return graph


def serialize_edge_list(G: Graph) -> str:
    """Canonical edge-list serialization of the active subgraph on the
    original id space (inactive ids appear as isolated vertices)."""
    lines = [f"{G.n} {G.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# graph6


def _g6_decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the edge bits)."""
    if not data:
        raise ValueError("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        chunk = data[1:4]
        if len(chunk) != 3:
            raise ValueError("truncated graph6 size field")
        n = 0
        for c in chunk:
            n = (n << 6) | _g6_value(c)
        return n, 4
    chunk = data[2:8]
    if len(chunk) != 6:
        raise ValueError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | _g6_value(c)
    return n, 8


def _g6_value(byte: int) -> int:
    if not 63 <= byte <= 126:
        raise ValueError(f"invalid graph6 byte: {byte}")
    return byte - 63


def parse_graph6_line(line: str) -> Graph:
    """Decode one graph6 record (optionally prefixed by the format header)."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    data = s.encode("ascii")
    n, off = _g6_decode_size(data)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise ValueError(
            f"graph6 record for n={n} needs {nbytes} data bytes, got {len(body)}"
        )
    rows = [0] * n
    bitpos = 0
    for v in range(1, n):
        for u in range(v):
            byte = _g6_value(body[bitpos // 6])
            if (byte >> (5 - bitpos % 6)) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bitpos += 1
    return Graph(n, tuple(rows), (1 << n) - 1)


def parse_graph6(text: str) -> list[Graph]:
    """Decode a graph6 stream, one record per non-blank line."""
    graphs = []
    for line in text.splitlines():
        if line.strip():
            graphs.append(parse_graph6_line(line))
    return graphs


def to_graph6(G: Graph) -> str:
    """Encode the active subgraph (on the original id space) as one graph6
    record without trailing newline."""
    n = G.n
    if n <= 62:
        size = bytes([n + 63])
    elif n <= 258047:
        size = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise ValueError("graph too large for this encoder")
    act = G.active_mask
    bits_out = []
    for v in range(1, n):
        col = G._adj[v] & act if (act >> v) & 1 else 0
        for u in range(v):
            bits_out.append((col >> u) & 1)
    body = bytearray()
    for i in range(0, len(bits_out), 6):
        group = bits_out[i : i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        body.append(value + 63)
    return (size + bytes(body)).decode("ascii")


# ----------------------------------------------------------------------
# loading with format sniffing


def load_graphs(text: str, fmt: str = "auto") -> tuple[list[Graph], list[str], str]:
    """Parse ``text`` as ``edgelist`` or ``graph6`` (or sniff with
    ``auto``); return (graphs, warnings, detected format).

    Sniffing is unambiguous: an edge-list document starts with two decimal
    integers, which can never begin a graph6 record (its bytes live in
    ``63..126``).
    """
    if fmt not in ("auto", "edgelist", "graph6"):
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "auto":
        fmt = _sniff(text)
    if fmt == "edgelist":
        graph, warnings = parse_edge_list_document(text)
        return [graph], warnings, "edgelist"
    return parse_graph6(text), [], "graph6"


def _sniff(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(GRAPH6_HEADER):
            return "graph6"
        parts = line.split()
        if len(parts) == 2:
            try:
                int(parts[0]), int(parts[1])
                return "edgelist"
            except ValueError:
                return "graph6"
        return "graph6"
    raise ValueError("empty input: cannot determine graph format")
