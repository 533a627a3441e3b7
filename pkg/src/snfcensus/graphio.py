"""graph6 parsing and emission, plus the core Graph type.

The graph6 format stores a simple undirected graph as one ASCII line:
a size byte ``n + 63`` (short form, so n <= 62) followed by the upper
triangle of the adjacency matrix.  The triangle is read column by
column -- bit x(i, j) for j = 1..n-1, i = 0..j-1 -- and packed
big-endian into 6-bit groups, each emitted as one byte with 63 added.
Unused padding bits in the final group must be zero in canonical
output; nonzero padding on input is tolerated but counted.
"""

from __future__ import annotations

from dataclasses import dataclass


class Graph6Error(ValueError):
    """Base class for graph6 decoding problems."""


class Graph6SizeError(Graph6Error):
    """Size byte missing, out of range, or long-form (n > 62)."""


class Graph6LengthError(Graph6Error):
    """Record length disagrees with ceil(n(n-1)/2 / 6) + 1."""


class Graph6ByteError(Graph6Error):
    """A data byte falls outside the printable range 63..126."""


#: Number of parsed records whose final byte carried nonzero padding
#: bits.  Such records decode fine but are not canonical; the counter
#: lets bulk ingestion report how dirty a file was.
padding_warnings = 0


def padding_warning_count() -> int:
    return padding_warnings


def reset_padding_warnings() -> None:
    global padding_warnings
    padding_warnings = 0


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is an integer bitset: bit u is set iff uv is an edge.
    Rows are symmetric and loop-free by construction.
    """

    n: int
    adj: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    out.append((v, u))
                row >>= 1
                u += 1
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def graph_from_edges(n: int, edges) -> Graph:
    """Build a Graph from an edge list; loops are rejected."""
    if not 1 <= n <= 64:
        raise ValueError(f"vertex count {n} outside 1..64")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _data_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 record (trailing newline tolerated)."""
    global padding_warnings
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.rstrip(b"\r\n")
    if not line:
        raise Graph6SizeError("empty record")
    size = line[0]
    if size == 126:
        raise Graph6SizeError("long-form size byte (n > 62) not supported")
    if not 63 <= size <= 125:
        raise Graph6SizeError(f"size byte {size} outside 63..125")
    n = size - 63
    if n < 1:
        raise Graph6SizeError("graphs need at least one vertex")
    data = line[1:]
    want = _data_len(n)
    if len(data) < want:
        raise Graph6LengthError(f"truncated: {len(data)} data bytes, need {want}")
    if len(data) > want:
        raise Graph6LengthError(f"trailing garbage: {len(data)} data bytes, need {want}")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6ByteError(f"data byte {b} outside 63..126")

    rows = [0] * n
    bitpos = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[bitpos // 6] - 63
            if (byte >> (5 - bitpos % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bitpos += 1
    # check padding bits beyond the triangle
    if bitpos % 6:
        tail = data[-1] - 63
        if tail & ((1 << (6 - bitpos % 6)) - 1):
            padding_warnings += 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding (no trailing newline)."""
    if g.n > 62:
        raise Graph6SizeError(f"cannot encode n = {g.n} > 62 in short form")
    out = bytearray([g.n + 63])
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0 covers all vertices."""
    if g.n == 1:
        return True
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= adj[v]
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1
