"""Isomorph-free generation of connected graphs and free trees.

The connected enumerator grows a catalog of *all* graphs on k
vertices (one representative per isomorphism class) by attaching a
new vertex to every subset of each (k-1)-vertex representative and
deduplicating through ``canonical_form``; connected classes are then
filtered out.  Augmenting from every class is complete: deleting the
highest vertex of any n-vertex graph leaves some (n-1)-vertex class,
so every class is reached.

Free trees come from the level-sequence successor generator
(Wright/Richmond/Odlyzko/McKay) as implemented by networkx, which
emits exactly one representative per class in sequence order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

import networkx as nx

from snfcensus.graphio import (
    Graph,
    Graph6Error,
    graph_from_edges,
    is_connected,
    parse_graph6,
    write_graph6,
)

CANONICAL_MAX_N = 10
ENUM_MAX_N = 8
TREE_MAX_N = 20


# --------------------------------------------------------- canonical form

def _refine(adj: tuple[int, ...], n: int) -> list[list[int]]:
    """Iterated neighbor-color refinement; returns cells of the stable
    ordered partition.  Round one is the ordered degree partition, and
    every later round refines by the sorted multiset of neighbor
    colors, so cell order is isomorphism-invariant throughout."""
    colors = [row.bit_count() for row in adj]
    ncolors = len(set(colors))
    while True:
        names = []
        for v in range(n):
            nb = []
            r = adj[v]
            u = 0
            while r:
                if r & 1:
                    nb.append(colors[u])
                r >>= 1
                u += 1
            nb.sort()
            names.append((colors[v], tuple(nb)))
        rank = {nm: i for i, nm in enumerate(sorted(set(names)))}
        colors = [rank[nm] for nm in names]
        if len(rank) == ncolors:
            break
        ncolors = len(rank)
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for v, c in enumerate(colors):
        cells[c].append(v)
    return cells


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes: equal iff the graphs are isomorphic.

    Minimizes the packed upper-triangle bit string over all vertex
    orderings compatible with the refined partition.  The refinement
    only narrows the search; correctness comes from exhausting the
    within-cell orderings, so equal bytes always means isomorphic.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return write_graph6(g)
    adj = g.adj
    deg_total = sum(row.bit_count() for row in adj)
    if deg_total == 0 or deg_total == n * (n - 1):
        return write_graph6(g)  # empty or complete: every ordering agrees

    cells = _refine(adj, n)
    cell_of_pos: list[int] = []
    for ci, cell in enumerate(cells):
        cell_of_pos.extend([ci] * len(cell))

    best: list[int] | None = None
    placed: list[int] = []
    rows: list[int] = []
    used = [False] * n

    # state 0: prefix equals best's prefix (compare and prune);
    # state -1: prefix already strictly below best (first leaf wins).
    # A child that improves best returns True, which snaps the parent
    # back to state 0 -- the new best now runs through this node.
    def dfs(pos: int, state: int) -> bool:
        nonlocal best
        if pos == n:
            if best is None or state == -1:
                best = rows.copy()
                return True
            return False
        updated = False
        for v in cells[cell_of_pos[pos]]:
            if used[v]:
                continue
            if pos:
                av = adj[v]
                r = 0
                for u in placed:
                    r = (r << 1) | ((av >> u) & 1)
                if best is not None and state == 0:
                    b = best[pos - 1]
                    if r > b:
                        continue
                    child_state = -1 if r < b else 0
                else:
                    child_state = -1
            else:
                child_state = state if best is not None else -1
            used[v] = True
            placed.append(v)
            if pos:
                rows.append(r)
            if dfs(pos + 1, child_state):
                updated = True
                state = 0
            if pos:
                rows.pop()
            placed.pop()
            used[v] = False
        return updated

    dfs(0, 0)
    assert best is not None
    out = [0] * n
    for j in range(1, n):
        rj = best[j - 1]
        for i in range(j):
            if (rj >> (j - 1 - i)) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return write_graph6(Graph(n, tuple(out)))


# ------------------------------------------------------------- streams

class GraphStream:
    """Restartable stream of graphs, one per isomorphism class.

    ``emitted`` counts the graphs yielded by the most recent (or
    ongoing) iteration; iterating again restarts the source.
    """

    def __init__(self, source: str, n: int, factory: Callable[[], Iterator[Graph]]):
        self.source = source
        self.n = n
        self.emitted = 0
        self._factory = factory

    def __iter__(self) -> Iterator[Graph]:
        self.emitted = 0
        for g in self._factory():
            self.emitted += 1
            yield g

    def __repr__(self) -> str:
        return f"GraphStream({self.source!r}, n={self.n}, emitted={self.emitted})"


@lru_cache(maxsize=None)
def _graph_catalog(n: int) -> tuple[Graph, ...]:
    """Every graph on n vertices (connected or not), canonically
    labeled, sorted by canonical bytes.  Grown by vertex extension."""
    if n == 1:
        return (Graph(1, (0,)),)
    found: set[bytes] = set()
    for parent in _graph_catalog(n - 1):
        base = parent.adj
        hi = 1 << (n - 1)
        for mask in range(hi):
            rows = list(base)
            m = mask
            u = 0
            while m:
                if m & 1:
                    rows[u] |= hi
                m >>= 1
                u += 1
            rows.append(mask)
            found.add(canonical_form(Graph(n, tuple(rows))))
    return tuple(parse_graph6(rec) for rec in sorted(found))


def enumerate_connected(n: int) -> GraphStream:
    """All connected graphs on n vertices, one per class, in
    lexicographic canonical-bytes order.  Built-in range is 1..8;
    larger universes must be ingested from graph6 files."""
    if not 1 <= n <= ENUM_MAX_N:
        raise ValueError(
            f"built-in enumeration covers 1 <= n <= {ENUM_MAX_N}; "
            f"use a graph6 file for n = {n}")

    def factory() -> Iterator[Graph]:
        for g in _graph_catalog(n):
            if is_connected(g):
                yield g

    return GraphStream(f"connected(n={n})", n, factory)


def enumerate_trees(n: int) -> GraphStream:
    """All free trees on n vertices in level-sequence order."""
    if not 1 <= n <= TREE_MAX_N:
        raise ValueError(f"tree enumeration covers 1 <= n <= {TREE_MAX_N}, got {n}")

    def factory() -> Iterator[Graph]:
        if n == 1:
            yield Graph(1, (0,))
            return
        for t in nx.nonisomorphic_trees(n):
            yield graph_from_edges(n, t.edges())

    return GraphStream(f"trees(n={n})", n, factory)


def graph6_file_stream(path: str, expect_n: int | None = None,
                       label: str | None = None) -> GraphStream:
    """Stream a graph6 file (one record per line, optional format
    header).  All records must share one vertex count; errors carry
    the 1-based record number.  `label` names the source in error
    messages when it differs from the path (e.g. spooled stdin)."""
    name = path if label is None else label

    def records() -> Iterator[tuple[int, bytes]]:
        recno = 0
        with open(path, "rb") as fh:
            for raw in fh:
                line = raw.strip()
                if not line:
                    continue
                if line.startswith(b">>graph6<<"):
                    line = line[len(b">>graph6<<"):]
                    if not line:
                        continue
                recno += 1
                yield recno, line

    first_n = expect_n
    if first_n is None:
        for _, line in records():
            first_n = parse_graph6(line).n
            break
        if first_n is None:
            raise Graph6Error(f"{name}: no graph6 records found")
    want = first_n

    def factory() -> Iterator[Graph]:
        for recno, line in records():
            try:
                g = parse_graph6(line)
            except Graph6Error as e:
                raise type(e)(f"{name} record {recno}: {e}") from None
            if g.n != want:
                raise Graph6Error(
                    f"{name} record {recno}: n = {g.n}, expected {want}")
            yield g

    return GraphStream(name, want, factory)


# ----------------------------------------------------- catalog building

def _component_masks(g: Graph) -> list[int]:
    masks = []
    remaining = (1 << g.n) - 1
    adj = g.adj
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            v = 0
            while f:
                if f & 1:
                    nxt |= adj[v]
                f >>= 1
                v += 1
            frontier = nxt & ~seen
            seen |= frontier
        masks.append(seen)
        remaining &= ~seen
    return masks


def build_connected_catalog(n: int, path: str) -> int:
    """Write every connected n-vertex class to ``path`` as sorted
    graph6 lines; returns the class count.

    Extends each (n-1)-vertex class by a new vertex whose
    neighborhood meets every component of the parent, which makes the
    candidate connected and still reaches every connected class.
    Intended for n = 9, one step past the in-memory enumerator.
    """
    if not 2 <= n <= CANONICAL_MAX_N - 1:
        raise ValueError(f"catalog building supported for 2 <= n <= {CANONICAL_MAX_N - 1}")
    found: set[bytes] = set()
    hi = 1 << (n - 1)
    for parent in _graph_catalog(n - 1):
        comps = _component_masks(parent)
        base = parent.adj
        for mask in range(1, hi):
            ok = True
            for cm in comps:
                if not mask & cm:
                    ok = False
                    break
            if not ok:
                continue
            rows = list(base)
            m = mask
            u = 0
            while m:
                if m & 1:
                    rows[u] |= hi
                m >>= 1
                u += 1
            rows.append(mask)
            found.add(canonical_form(Graph(n, tuple(rows))))
    with open(path, "wb") as fh:
        for rec in sorted(found):
            fh.write(rec + b"\n")
    return len(found)


# --------------------------------------------------------- constructors

def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """K_{m,n}: vertices 0..m-1 on one side, m..m+n-1 on the other."""
    return graph_from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])
