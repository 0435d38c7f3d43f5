"""Closed-form bounds and asymptotic invariants for graph family codes.

Sizes are exact Python integers (arbitrary precision), so bounds like
2^C(n,2) need no special handling; fractional exponents (the odd-n
edge-cover bound) are carried as exact Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import LabeledGraph, adjacency_masks, edge_slots
from .errors import CapabilityError, DomainError, UnsupportedParameterError

CHROMATIC_CAP = 10


def product_upper_bound(n: int, dual_lower_log2: int) -> int:
    """Exponent bound from the product inequality: a dual family of size
    2^d forces good families to at most 2^(C(n,2) - d) members."""
    if not 0 <= dual_lower_log2 <= edge_slots(n):
        raise DomainError("dual exponent out of range")
    return edge_slots(n) - dual_lower_log2


def turan_number(n: int, r: int) -> int:
    """Maximum edges of an n-vertex graph with no K_r: the edge count of the
    balanced complete (r-1)-partite graph."""
    if r < 3:
        raise DomainError("need r >= 3")
    parts = r - 1
    q, rem = divmod(n, parts)
    sizes = [q + 1] * rem + [q] * (parts - rem)
    return comb(n, 2) - sum(comb(s, 2) for s in sizes)


def subgraph_upper_bound(n: int, r: int) -> int:
    """log2 of the clique-containment bound: C(n,2) - ex(n, K_r)."""
    return edge_slots(n) - turan_number(n, r)


def star_upper_bound(n: int) -> int:
    """Edge-coloring bound on spanning-star families: n+1 if n odd, n if even."""
    if n < 2:
        raise DomainError("need n >= 2")
    return n + 1 if n % 2 else n


def shearer_dual_star_bounds(n: int) -> tuple[Fraction, Fraction]:
    """(log2 lower, log2 upper) for the largest family with no spanning star
    in any difference: C(n,2) - ceil(n/2) <= log2 D <= C(n,2) - n/2, the
    upper side via Shearer's projection inequality over the vertex stars."""
    if n < 2:
        raise DomainError("need n >= 2")
    slots = edge_slots(n)
    return Fraction(slots - (n + 1) // 2), Fraction(slots) - Fraction(n, 2)


# ---------------------------------------------------------------------------
# chromatic and partition numbers of small patterns


def _check_pattern_size(g: LabeledGraph) -> None:
    if g.n > CHROMATIC_CAP:
        raise CapabilityError(f"pattern cap is {CHROMATIC_CAP} vertices, got {g.n}")


def _colorable(n: int, adj: list[int], k: int) -> bool:
    color = [-1] * n
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    def assign(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        used = 0
        for u in range(n):
            if adj[v] >> u & 1 and color[u] >= 0:
                used |= 1 << color[u]
        limit = min(k, idx + 1)  # new colors beyond the first unseen are symmetric
        for c in range(limit):
            if not used >> c & 1:
                color[v] = c
                if assign(idx + 1):
                    return True
                color[v] = -1
        return False

    return assign(0)


def chromatic_number(g: LabeledGraph) -> int:
    """Exact chromatic number by branch and bound over color counts."""
    _check_pattern_size(g)
    adj = adjacency_masks(g.n, g.bits)
    for k in range(1, g.n + 1):
        if _colorable(g.n, adj, k):
            return k
    return g.n


def _maximal_parts(v: int, neigh: list[int], within: int) -> list[int]:
    """Maximal cliques containing v in the graph induced on ``within``,
    for the given adjacency (pass complement adjacency for independent
    sets).  Bron-Kerbosch with pivoting."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        u = (px & -px).bit_length() - 1
        cand = p & ~neigh[u]
        while cand:
            lowbit = cand & -cand
            cand ^= lowbit
            w = lowbit.bit_length() - 1
            bk(r | lowbit, p & neigh[w], x & neigh[w])
            p ^= lowbit
            x |= lowbit

    bk(1 << v, neigh[v] & within, 0)
    return out


def _cover_possible(
    n: int, adj: list[int], comp: list[int], cliques: int, indep: int
) -> bool:
    """Whether s cliques plus t independent sets can cover all n vertices.

    Branches on the parts containing the lowest uncovered vertex; parts
    maximal within the uncovered set suffice because enlarging a part never
    hurts a cover."""

    def rec(uncovered: int, s: int, t: int) -> bool:
        if not uncovered:
            return True
        if s == 0 and t == 0:
            return False
        v = (uncovered & -uncovered).bit_length() - 1
        if s > 0:
            for part in _maximal_parts(v, adj, uncovered):
                if rec(uncovered & ~part, s - 1, t):
                    return True
        if t > 0:
            for part in _maximal_parts(v, comp, uncovered):
                if rec(uncovered & ~part, s, t - 1):
                    return True
        return False

    return rec((1 << n) - 1, cliques, indep)


def partition_number(g: LabeledGraph) -> int:
    """Largest r such that for some s the vertices cannot be covered by s
    cliques and r-s independent sets; exhaustive over covers.

    Coverability is monotone in r (drop a part), so scanning r upward may
    stop at the first r where every split succeeds."""
    _check_pattern_size(g)
    n = g.n
    adj = adjacency_masks(n, g.bits)
    comp = [((1 << n) - 1) ^ adj[v] ^ (1 << v) for v in range(n)]
    best = 0
    for r in range(1, n + 1):
        if any(not _cover_possible(n, adj, comp, s, r - s) for s in range(r + 1)):
            best = r
        else:
            break
    return best


# ---------------------------------------------------------------------------
# rate and distancity


def distancity(pattern: LabeledGraph, induced: bool = False) -> Fraction:
    """Asymptotic rate limit for containment conditions: 1/(chi - 1).

    The induced and non-induced variants coincide.  Edgeless patterns fall
    outside the formula (their families behave like clique-agreement codes).
    """
    if pattern.is_empty:
        raise UnsupportedParameterError(
            "distancity formula needs a pattern with at least one edge"
        )
    del induced  # same value either way
    return Fraction(1, chromatic_number(pattern) - 1)


def distancity_of_class(patterns) -> Fraction:
    """Distancity of a finite union of containment conditions: the minimum
    chromatic number over the class governs."""
    pats = list(patterns)
    if not pats:
        raise DomainError("need at least one pattern")
    chi_min = min(chromatic_number(p) for p in pats)
    if any(p.is_empty for p in pats) or chi_min < 2:
        raise UnsupportedParameterError("patterns must each contain an edge")
    return Fraction(1, chi_min - 1)


def rate(n: int, family_size: int) -> float:
    """Code rate over the C(n,2) edge slots: 2 log2(size) / (n(n-1))."""
    if n < 2:
        raise DomainError("need n >= 2")
    if family_size < 1:
        raise DomainError("need a positive size")
    return 2.0 * math.log2(family_size) / (n * (n - 1))


# ---------------------------------------------------------------------------
# bound reports


@dataclass(frozen=True, slots=True)
class BoundReport:
    """A lower bound (from a construction) paired with an upper bound."""

    n: int
    predicate: str
    lower: int | None
    lower_source: str | None
    upper: int | None
    upper_log2: Fraction | None
    upper_source: str | None

    def __post_init__(self) -> None:
        if (
            self.lower is not None
            and self.upper is not None
            and self.lower > self.upper
        ):
            raise DomainError("lower bound exceeds upper bound")

    @property
    def tight(self) -> bool:
        return (
            self.lower is not None
            and self.upper is not None
            and self.lower == self.upper
        )
