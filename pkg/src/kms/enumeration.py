"""Non-isomorphic connected graph generation and isomorphism testing.

The canonical form of a graph is the minimum of its upper-triangle
adjacency bit string over all vertex relabelings, packed in graph6 pair
order with the first pair most significant.  Two graphs are isomorphic
iff their canonical integers agree, and the integer doubles as the
graph6 body of the canonically labeled representative.  Exact up to
order 10 via pruned permutation search.

Generation works by vertex augmentation: every connected graph on n >= 2
vertices has a spanning-tree leaf, i.e. a vertex whose removal leaves a
connected graph, so attaching a new vertex to every nonempty neighborhood
of every connected (n-1)-vertex representative reaches every class on n
vertices.  Candidates are deduplicated by canonical form and emitted in
ascending canonical order, which makes the stream deterministic and every
emitted graph equal to its own canonical representative.  (A full scan of
all labeled adjacency patterns would also be exact, and remains the test
oracle for n <= 6, but at n = 8 it means 2^28 minimality checks; the
augmentation route needs about 10^5.)

Built-in generation stops at order 8 (11117 classes); larger orders are
ingested from graph6 files produced by external enumerators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .backend import kernels
from .errors import GraphInputError, OrderCapError
from .graphs import Graph, _pair_at

CANONICAL_CAP = 10
GENERATION_CAP = 8


@dataclass(frozen=True)
class CanonicalForm:
    """Order plus the permutation-minimal upper-triangle bit string."""

    n: int
    bits: int


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> CanonicalForm:
    if g.n > cap:
        raise OrderCapError(f"canonical form capped at order {cap}, got {g.n}")
    return CanonicalForm(g.n, int(kernels.canonical_bits(g.neighbor_masks())))


def graph_from_canonical(n: int, bits: int) -> Graph:
    """Rebuild the representative graph encoded by a canonical integer."""
    if n < 0:
        raise GraphInputError("order must be >= 0")
    full_bits = n * (n - 1) // 2
    if bits < 0 or bits >> full_bits:
        raise GraphInputError("canonical bits out of range for this order")
    rows = [0] * n
    for idx in range(full_bits):
        if (bits >> (full_bits - 1 - idx)) & 1:
            u, v = _pair_at(idx)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def are_isomorphic(g: Graph, h: Graph, cap: int = CANONICAL_CAP) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, cap).bits == canonical_form(h, cap).bits


@lru_cache(maxsize=None)
def _connected_bits(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    parents = _connected_bits(n - 1)
    seen: set[int] = set()
    masks = np.zeros(n, dtype=np.int64)
    new_bit = 1 << (n - 1)
    for parent_bits in parents:
        parent = graph_from_canonical(n - 1, parent_bits)
        for attach in range(1, 1 << (n - 1)):
            for v in range(n - 1):
                masks[v] = parent.rows[v] | (new_bit if (attach >> v) & 1 else 0)
            masks[n - 1] = attach
            seen.add(int(kernels.canonical_bits(masks)))
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected order-n
    graphs, in ascending canonical order; built-in for n <= 8."""
    if n < 1:
        raise GraphInputError("order must be >= 1")
    if n > GENERATION_CAP:
        raise OrderCapError(
            f"built-in generation capped at order {GENERATION_CAP}; "
            "ingest a graph6 file for larger orders"
        )
    return tuple(graph_from_canonical(n, bits) for bits in _connected_bits(n))
