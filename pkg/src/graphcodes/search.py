"""Exact extremal search over all 2^C(n,2) labeled graphs.

The compatibility graph has every labeled graph as a vertex, with two graphs
adjacent when their symmetric difference satisfies the predicate.  Maximum
good families are its cliques and maximum dual families its independent sets;
both searches exploit translation symmetry (XOR by a member maps families to
families), so the optimum may be assumed to contain the empty graph and the
search runs on the graphs satisfying (or violating) the predicate alone.
"""

from __future__ import annotations

import time
from bisect import bisect_left
from dataclasses import dataclass

from .core import LabeledGraph, edge_slots
from .errors import CapabilityError, DomainError
from .family import GraphFamily
from .linalg import gf2_reduced_basis
from .predicates import Predicate
from . import bounds

GOOD_EXACT_LIMIT = 5
DUAL_EXACT_LIMIT = 4
LINEAR_LIMIT = 8
DEFAULT_BUDGET_NODES = 10**8


@dataclass(frozen=True, slots=True)
class SearchResult:
    """Optimum (or best-so-far on timeout) with a verifiable certificate."""

    optimum: int
    certificate: GraphFamily
    explored: int
    status: str  # "exact" | "timeout"
    rank: int | None = None


class _BudgetExhausted(Exception):
    pass


class _Budget:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, budget_nodes: int | None, time_ms: int | None):
        self.nodes = 0
        self.limit = budget_nodes if budget_nodes is not None else DEFAULT_BUDGET_NODES
        self.deadline = (
            time.perf_counter() + time_ms / 1000.0 if time_ms is not None else None
        )

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _BudgetExhausted
        if (
            self.deadline is not None
            and self.nodes % 1024 == 0
            and time.perf_counter() > self.deadline
        ):
            raise _BudgetExhausted


def _iter_bits(mask: int):
    while mask:
        lowbit = mask & -mask
        yield lowbit.bit_length() - 1
        mask ^= lowbit


def _max_clique(adj: list[int], budget: _Budget) -> tuple[list[int], bool]:
    """Deterministic branch and bound (greedy coloring bound) over vertices
    0..len(adj)-1 in index order.  Returns (clique, exhausted): the clique is
    a maximum one unless the budget ran out, then the incumbent."""
    best: list[int] = []

    def color_order(p: int) -> list[tuple[int, int]]:
        classes: list[int] = []
        order: list[tuple[int, int]] = []
        for v in _iter_bits(p):
            placed = False
            for c, members in enumerate(classes):
                if not adj[v] & members:
                    classes[c] |= 1 << v
                    order.append((v, c + 1))
                    placed = True
                    break
            if not placed:
                classes.append(1 << v)
                order.append((v, len(classes)))
        order.sort(key=lambda vc: vc[1])
        return order

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        budget.spend()
        order = color_order(p)
        for v, bound in reversed(order):
            if len(r) + bound <= len(best):
                return
            r.append(v)
            nxt = p & adj[v]
            if nxt:
                expand(r, nxt)
            elif len(r) > len(best):
                best = r.copy()
            r.pop()
            p ^= 1 << v
        return

    exhausted = False
    try:
        if adj:
            expand([], (1 << len(adj)) - 1)
    except _BudgetExhausted:
        exhausted = True
    return best, exhausted


def _compatibility_search(
    n: int, pred: Predicate, expect: bool, budget_nodes, time_ms, mode: str
) -> SearchResult:
    slots = edge_slots(n)
    test = pred.test_mask
    cands = [m for m in range(1, 1 << slots) if test(n, m) == expect]
    adj = [0] * len(cands)
    for i in range(len(cands)):
        ci = cands[i]
        for j in range(i + 1, len(cands)):
            if test(n, ci ^ cands[j]) == expect:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    budget = _Budget(budget_nodes, time_ms)
    clique, exhausted = _max_clique(adj, budget)
    status = "timeout" if exhausted else "exact"
    masks = sorted([0] + [cands[i] for i in clique])
    certificate = GraphFamily(
        n,
        tuple(LabeledGraph(n, m) for m in masks),
        provenance={"construction": "search", "mode": mode,
                     "predicate": pred.name, "n": n},
    )
    return SearchResult(
        optimum=len(masks),
        certificate=certificate,
        explored=budget.nodes,
        status=status,
    )


def max_good_family(
    n: int,
    pred: Predicate,
    budget_nodes: int | None = None,
    time_ms: int | None = None,
) -> SearchResult:
    """Exact largest family whose pairwise differences satisfy the predicate.

    Translation symmetry pins the empty graph into the family, so this is
    1 + the clique number among the predicate-satisfying graphs."""
    if n > GOOD_EXACT_LIMIT:
        raise CapabilityError(
            f"exact good-family search is limited to n <= {GOOD_EXACT_LIMIT}"
        )
    if n < 2:
        raise DomainError("need n >= 2")
    return _compatibility_search(n, pred, True, budget_nodes, time_ms, "good")


def max_dual_family(
    n: int,
    pred: Predicate,
    budget_nodes: int | None = None,
    time_ms: int | None = None,
) -> SearchResult:
    """Exact largest family with no pairwise difference satisfying the
    predicate: a maximum independent set of the compatibility graph, found
    as a clique among the predicate-violating graphs."""
    if n > DUAL_EXACT_LIMIT:
        raise CapabilityError(
            f"exact dual-family search is limited to n <= {DUAL_EXACT_LIMIT}"
        )
    if n < 2:
        raise DomainError("need n >= 2")
    return _compatibility_search(n, pred, False, budget_nodes, time_ms, "dual")


def linear_rank_bound(pred: Predicate, n: int) -> int | None:
    """A proven cap on the rank of a linear family for this predicate, where
    one is known; used to stop the basis search early."""
    if pred.kind == "connected" or pred.kind == "hampath":
        return n - 1
    if pred.kind == "hamcycle":
        return n - 2
    if pred.kind == "kconn":
        if pred.k == 2:
            return n - 2
        if pred.k == 3:
            # product bound via the degree-<=1 dual: M <= 2^(n-1) / n
            return ((1 << (n - 1)) // n).bit_length() - 1
        return None
    if pred.kind == "star":
        return bounds.star_upper_bound(n).bit_length() - 1
    if pred.kind == "contains" and pred.pattern is not None:
        p = pred.pattern
        if p.bits == (1 << edge_slots(p.n)) - 1:  # clique pattern
            return bounds.subgraph_upper_bound(n, p.n)
    if pred.kind == "oddcycle":
        return bounds.subgraph_upper_bound(n, 3)
    return None


def max_linear_family(
    n: int,
    pred: Predicate,
    max_rank: int | None = None,
    budget_nodes: int | None = None,
    time_ms: int | None = None,
) -> SearchResult:
    """Depth-first search for the largest-rank family closed under symmetric
    difference whose nonzero members all satisfy the predicate.

    Bases grow in ascending edge-vector order; a basis extension by g is
    admitted when every element of span + g satisfies the predicate.  Where a
    theorem caps the achievable rank, reaching the cap proves optimality."""
    if n > LINEAR_LIMIT:
        raise CapabilityError(f"linear search is limited to n <= {LINEAR_LIMIT}")
    if n < 2:
        raise DomainError("need n >= 2")
    slots = edge_slots(n)
    test = pred.test_mask
    cap = linear_rank_bound(pred, n)
    if max_rank is not None:
        cap = max_rank if cap is None else min(cap, max_rank)
    if cap is None:
        cap = slots
    budget = _Budget(budget_nodes, time_ms)

    # lazily discovered predicate-satisfying masks, ascending; every mask
    # below scan_state[0] has been classified
    cand_cache: list[int] = []
    scan_state = [1]

    def next_candidate(at_least: int) -> int | None:
        idx = bisect_left(cand_cache, at_least)
        if idx < len(cand_cache):
            return cand_cache[idx]
        probe = scan_state[0]
        top = 1 << slots
        while probe < top:
            budget.spend()
            m = probe
            probe += 1
            scan_state[0] = probe
            if test(n, m):
                cand_cache.append(m)
                if m >= at_least:
                    return m
        return None

    best_basis: list[int] = []
    done = False

    def extend(basis: list[int], span: list[int], start: int) -> None:
        nonlocal best_basis, done
        if len(basis) > len(best_basis):
            best_basis = basis.copy()
            if len(best_basis) >= cap:
                done = True
                return
        if len(basis) + 1 > cap:
            return
        at_least = start
        while not done:
            g = next_candidate(at_least)
            if g is None:
                return
            at_least = g + 1
            budget.spend()
            new = [s ^ g for s in span]
            if all(test(n, x) for x in new):
                extend(basis + [g], span + new, g + 1)

    status = "exact"
    try:
        extend([], [0], 1)
    except _BudgetExhausted:
        status = "timeout"
    rows = gf2_reduced_basis(best_basis)
    masks = [0] * (1 << len(rows))
    cur = 0
    for i in range(1, 1 << len(rows)):
        cur ^= rows[(i & -i).bit_length() - 1]
        masks[i] = cur
    masks.sort()
    certificate = GraphFamily(
        n,
        tuple(LabeledGraph(n, m) for m in masks),
        provenance={"construction": "search", "mode": "linear",
                     "predicate": pred.name, "n": n},
    )
    return SearchResult(
        optimum=len(masks),
        certificate=certificate,
        explored=budget.nodes,
        status=status,
        rank=len(rows),
    )
