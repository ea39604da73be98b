"""Text codecs: graph6 (n <= 62) and the plain edge-list format."""

from __future__ import annotations

from .graph import Graph, GraphError, from_edge_list, pair_order

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Malformed graph6 or edge-list input."""


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 record: size byte, then upper-triangle bits packed
    six per character at offset 63, final sextet zero-padded."""
    if g.n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for u, v in pair_order(g.n):
        acc = acc << 1 | (g.adj[v] >> u & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc = 0
            nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (optionally prefixed with the ``>>graph6<<`` header)."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    first = ord(s[0])
    if first == 126:
        raise FormatError(f"graph6 long-size form unsupported (n > {GRAPH6_MAX_N})")
    if not 63 <= first <= 125:
        raise FormatError(f"malformed graph6 length header {s[0]!r}")
    n = first - 63
    if n == 0:
        raise FormatError("graph6 record encodes a 0-vertex graph; n >= 1 required")
    pairs = pair_order(n)
    want = (len(pairs) + 5) // 6
    payload = s[1:]
    if len(payload) != want:
        raise FormatError(
            f"graph6 payload for n={n} needs {want} characters, got {len(payload)}"
        )
    bits = 0
    for ch in payload:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise FormatError(f"stray character {ch!r} in graph6 payload")
        bits = bits << 6 | value
    bits >>= 6 * want - len(pairs)
    adj = [0] * n
    for t, (u, v) in enumerate(pairs):
        if bits >> (len(pairs) - 1 - t) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


def read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def to_edge_list_text(g: Graph) -> str:
    """First line ``n m``, then one 0-indexed ``u v`` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise FormatError("edge-list input must start with a 'n m' line")
    try:
        n, m = (int(tok) for tok in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"edge list announces {m} edges but contains {len(edges)}")
    return from_edge_list(n, edges)
