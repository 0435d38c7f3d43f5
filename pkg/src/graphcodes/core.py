"""Labeled graphs on {1..n} stored as bit vectors over colex edge slots.

Edge {i,j} with 1 <= i < j <= n lives at slot (j-1)(j-2)/2 + (i-1), so the
slots enumerate pairs in colex order of (j, i).  The symmetric difference of
two graphs is the XOR of their bit vectors.  Graphs are immutable and safe to
share between workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapabilityError, DomainError

DEFAULT_VERTEX_LIMIT = 64

_vertex_limit = DEFAULT_VERTEX_LIMIT


def vertex_limit() -> int:
    return _vertex_limit


def set_vertex_limit(limit: int) -> None:
    """Raise or lower the cap on vertex counts (default 64)."""
    global _vertex_limit
    if limit < 1:
        raise DomainError("vertex limit must be at least 1")
    _vertex_limit = limit


def edge_slots(n: int) -> int:
    """Number of edge slots C(n, 2) for an n-vertex graph."""
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Slot of edge {i, j}; requires 1 <= i < j <= n."""
    if not 1 <= i < j <= n:
        raise DomainError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    return (j - 1) * (j - 2) // 2 + (i - 1)


def edge_from_index(idx: int, n: int) -> tuple[int, int]:
    """Inverse of edge_index: the pair (i, j) stored at slot idx."""
    if not 0 <= idx < edge_slots(n):
        raise DomainError(f"slot {idx} out of range for n={n}")
    t = (1 + math.isqrt(1 + 8 * idx)) // 2
    while t * (t - 1) // 2 > idx:
        t -= 1
    while (t + 1) * t // 2 <= idx:
        t += 1
    return idx - t * (t - 1) // 2 + 1, t + 1


@lru_cache(maxsize=None)
def incidence_masks(n: int) -> tuple[int, ...]:
    """For each vertex v (0-based), the mask of slots of edges touching v+1."""
    inc = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            inc[i] |= 1 << idx
            inc[j] |= 1 << idx
            idx += 1
    return tuple(inc)


def adjacency_masks(n: int, bits: int) -> list[int]:
    """Neighbor bitmasks per vertex (0-based): bit u of adj[v] <=> edge {u+1, v+1}."""
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> idx & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return adj


@dataclass(frozen=True, slots=True)
class LabeledGraph:
    """Graph on vertex set {1..n}; bit k of ``bits`` is edge slot k."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("a graph needs at least one vertex")
        if self.n > _vertex_limit:
            raise CapabilityError(
                f"n={self.n} exceeds the configured vertex limit {_vertex_limit}"
            )
        if not 0 <= self.bits < (1 << edge_slots(self.n)):
            raise DomainError(f"edge bits out of range for n={self.n}")

    @property
    def num_slots(self) -> int:
        return edge_slots(self.n)

    @property
    def num_edges(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            raise DomainError("no self-loops")
        if i > j:
            i, j = j, i
        return bool(self.bits >> edge_index(i, j, self.n) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(edge_from_index(low.bit_length() - 1, self.n))
            bits ^= low
        return out

    def __xor__(self, other: "LabeledGraph") -> "LabeledGraph":
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        if self.n != other.n:
            raise DomainError(f"vertex counts differ: {self.n} vs {other.n}")
        return LabeledGraph(self.n, self.bits ^ other.bits)

    def complement(self) -> "LabeledGraph":
        return LabeledGraph(self.n, self.bits ^ ((1 << self.num_slots) - 1))

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} out of range for n={self.n}")
        return (self.bits & incidence_masks(self.n)[v - 1]).bit_count()

    def degree_sequence(self) -> list[int]:
        inc = incidence_masks(self.n)
        return [(self.bits & inc[v]).bit_count() for v in range(self.n)]

    def adjacency(self) -> list[int]:
        return adjacency_masks(self.n, self.bits)

    def induced_subgraph(self, vertices) -> "LabeledGraph":
        """Induced subgraph on the given vertices, relabeled 1..k in sorted order."""
        vs = sorted(set(vertices))
        if not vs or vs[0] < 1 or vs[-1] > self.n:
            raise DomainError("vertex subset out of range")
        bits = 0
        for b, jv in enumerate(vs):
            for a in range(b):
                if self.has_edge(vs[a], jv):
                    bits |= 1 << edge_index(a + 1, b + 1, len(vs))
        return LabeledGraph(len(vs), bits)

    def to_hex(self) -> str:
        """Pack slot k at byte k//8, bit k%8; lowercase hex of those bytes."""
        nbytes = (self.num_slots + 7) // 8
        return self.bits.to_bytes(nbytes, "little").hex()

    @classmethod
    def from_hex(cls, n: int, text: str) -> "LabeledGraph":
        nbytes = (edge_slots(n) + 7) // 8
        if len(text) != 2 * nbytes:
            raise DomainError(
                f"hex length {len(text)} != {2 * nbytes} expected for n={n}"
            )
        bits = int.from_bytes(bytes.fromhex(text), "little")
        if bits >> edge_slots(n):
            raise DomainError("padding bits beyond the last edge slot must be zero")
        return cls(n, bits)

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={self.edges()})"


def sym_diff(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """Symmetric difference of edge sets: bitwise XOR of the edge vectors."""
    return g ^ h


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, 0)


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, (1 << edge_slots(n)) - 1)


def graph_from_edges(n: int, edges) -> LabeledGraph:
    bits = 0
    for i, j in edges:
        if i == j:
            raise DomainError("no self-loops")
        if i > j:
            i, j = j, i
        slot = edge_index(i, j, n)
        if bits >> slot & 1:
            raise DomainError(f"duplicate edge {{{i},{j}}}")
        bits |= 1 << slot
    return LabeledGraph(n, bits)


def path_graph(n: int) -> LabeledGraph:
    return graph_from_edges(n, [(v, v + 1) for v in range(1, n)])


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def star_graph(n: int, center: int = 1) -> LabeledGraph:
    if not 1 <= center <= n:
        raise DomainError("center out of range")
    return graph_from_edges(n, [(center, v) for v in range(1, n + 1) if v != center])


def complete_bipartite_graph(n: int, side) -> LabeledGraph:
    """All edges between ``side`` and its complement in {1..n}."""
    in_side = set(side)
    if not in_side <= set(range(1, n + 1)):
        raise DomainError("side vertices out of range")
    edges = [
        (i, j)
        for j in range(2, n + 1)
        for i in range(1, j)
        if (i in in_side) != (j in in_side)
    ]
    return graph_from_edges(n, edges)
