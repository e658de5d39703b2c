"""Immutable simple graphs on labeled vertices, with the graph6 codec.

Vertices are 0..n-1.  Adjacency is stored as one Python int per vertex
(bit u of ``rows[v]`` is set iff uv is an edge), which makes subset and
component manipulation cheap and keeps values hashable and thread-safe.

Construction helpers cover the standard families (paths, cycles, complete
and complete bipartite graphs), the join and disjoint-union operators, and
the split star: a k-clique fully joined to n-k independent vertices.

graph6 is the interchange format: one graph per line, ``N(n) = n + 63``
for n <= 62 (multi-byte sizes accepted on input), then ceil(n(n-1)/12)
bytes each carrying 6 upper-triangle bits in column-major pair order
(0,1),(0,2),(1,2),(0,3),... with 63 added to every 6-bit group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DisconnectedGraphError,
    Graph6Error,
    GraphInputError,
    OrderCapError,
)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_WRITE_ORDER = 62


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbor bitmask of v.

    Order 0 (the null graph) is allowed so that deleting every vertex has
    a well-defined result; constructors of named families require n >= 1.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"graph order must be >= 0, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphInputError("adjacency rows do not match the order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphInputError(f"row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise GraphInputError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if ((self.rows[v] >> u) & 1) != ((self.rows[u] >> v) & 1):
                    raise GraphInputError(f"asymmetric adjacency at ({u}, {v})")

    @cached_property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for v in range(self.n)
            for u in range(v)
            if (self.rows[v] >> u) & 1
        ]

    def neighbor_masks(self) -> np.ndarray:
        """Adjacency rows as an int64 array for the compiled kernels (n <= 62)."""
        if self.n > GRAPH6_MAX_WRITE_ORDER:
            raise OrderCapError(f"order {self.n} exceeds the kernel cap of 62")
        return np.array(self.rows, dtype=np.int64)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range 0..{self.n - 1}")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class ComponentStats:
    """Connected components plus the isolated/odd counters.

    ``odd_total = isolated + odd_nontrivial`` always holds: every odd
    component is either a single vertex or a nontrivial odd component.
    """

    components: tuple[frozenset[int], ...]
    isolated: int
    odd_nontrivial: int
    odd_total: int


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphInputError(f"graph order must be >= 1, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Standard families and the composition operators
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    """P_n with vertices in traversal order 0-1-...-(n-1)."""
    if n < 1:
        raise GraphInputError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n with vertices in traversal order."""
    if n < 3:
        raise GraphInputError("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; side A is vertices 0..a-1, side B is a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphInputError("complete bipartite needs both sides >= 1")
    amask = (1 << a) - 1
    bmask = ((1 << b) - 1) << a
    return Graph(a + b, tuple(bmask if v < a else amask for v in range(a + b)))


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint copies of g and h plus every cross edge."""
    n = g.n + h.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [g.rows[v] | hmask for v in range(g.n)]
    rows += [(h.rows[v] << g.n) | gmask for v in range(h.n)]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are relabeled to g.n..g.n+h.n-1."""
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def split_star(n: int, k: int) -> Graph:
    """K_k joined to (n-k) independent vertices; the clique is 0..k-1."""
    if not 1 <= k <= n:
        raise GraphInputError(f"split star needs 1 <= k <= n, got k={k}, n={n}")
    if k == n:
        return complete_graph(n)
    return join(complete_graph(k), empty_graph(n - k))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the survivors, relabeled in stable order.

    Survivors keep their relative order, so downstream reports are
    deterministic.  Deleting every vertex returns the null graph.
    """
    dead = 0
    for v in vertices:
        g._check_vertex(v)
        dead |= 1 << v
    survivors = [v for v in range(g.n) if not (dead >> v) & 1]
    index = {v: i for i, v in enumerate(survivors)}
    rows = []
    for v in survivors:
        row = 0
        live = g.rows[v] & ~dead
        while live:
            u = (live & -live).bit_length() - 1
            row |= 1 << index[u]
            live &= live - 1
        rows.append(row)
    return Graph(len(survivors), tuple(rows))


# ---------------------------------------------------------------------------
# Components and connectivity
# ---------------------------------------------------------------------------


def _flood(rows: Sequence[int], start: int, allowed: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        scan = frontier
        while scan:
            v = (scan & -scan).bit_length() - 1
            nxt |= rows[v]
            scan &= scan - 1
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def component_stats(g: Graph) -> ComponentStats:
    """Partition into connected components with isolated/odd counters."""
    remaining = (1 << g.n) - 1
    comps: list[frozenset[int]] = []
    isolated = 0
    odd_nontrivial = 0
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comp = _flood(g.rows, v, remaining)
        remaining &= ~comp
        size = comp.bit_count()
        members = []
        scan = comp
        while scan:
            u = (scan & -scan).bit_length() - 1
            members.append(u)
            scan &= scan - 1
        comps.append(frozenset(members))
        if size == 1:
            isolated += 1
        elif size % 2 == 1:
            odd_nontrivial += 1
    return ComponentStats(
        components=tuple(comps),
        isolated=isolated,
        odd_nontrivial=odd_nontrivial,
        odd_total=isolated + odd_nontrivial,
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return _flood(g.rows, 0, full) == full


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def _parse_order(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the first body byte)."""
    if not data:
        raise Graph6Error("empty graph6 line")
    b0 = data[0]
    if b0 < 63 or b0 > 126:
        raise Graph6Error(f"byte {b0} out of graph6 range 63..126")
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 2:
        raise Graph6Error("truncated multi-byte order")
    if data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated 3-byte order")
        chunk = data[1:4]
        off = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated 6-byte order")
        chunk = data[2:8]
        off = 8
    n = 0
    for b in chunk:
        if b < 63 or b > 126:
            raise Graph6Error(f"byte {b} out of graph6 range 63..126")
        n = (n << 6) | (b - 63)
    return n, off


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line; a leading '>>graph6<<' header is stripped."""
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.rstrip(b"\r\n")
    if line.startswith(GRAPH6_HEADER.encode("ascii")):
        line = line[len(GRAPH6_HEADER):]
    n, off = _parse_order(line)
    if n < 1:
        raise Graph6Error("graph6 order must be >= 1")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[off:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} body bytes for n={n}, got {len(body)}"
            + (" (trailing garbage?)" if len(body) > nbytes else "")
        )
    rows = [0] * n
    bit = 0
    u, v = 0, 1  # walks the pair order (0,1),(0,2),(1,2),(0,3),...
    for byte in body:
        if byte < 63 or byte > 126:
            raise Graph6Error(f"byte {byte} out of graph6 range 63..126")
        group = byte - 63
        for i in range(5, -1, -1):
            if bit >= nbits:
                break
            if (group >> i) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, tuple(rows))


def _pair_at(bit: int) -> tuple[int, int]:
    """Inverse of the column-major pair enumeration (0,1),(0,2),(1,2),..."""
    v = 1
    while v * (v - 1) // 2 <= bit:
        v += 1
    v -= 1
    return bit - v * (v - 1) // 2, v


def write_graph6(g: Graph) -> str:
    """Encode under the current labeling; supports n <= 62 (single-byte size)."""
    if g.n < 1:
        raise GraphInputError("cannot encode the null graph")
    if g.n > GRAPH6_MAX_WRITE_ORDER:
        raise GraphInputError(
            f"graph6 writer supports n <= {GRAPH6_MAX_WRITE_ORDER}, got {g.n}"
        )
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for v in range(1, g.n):
        for u in range(v):
            group = (group << 1) | ((g.rows[v] >> u) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def iter_graph6(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    for line in lines:
        text = line.decode("ascii") if isinstance(line, bytes) else line
        if not text.strip():
            continue
        yield parse_graph6(text)


def read_graph6_file(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return list(iter_graph6(fh))
