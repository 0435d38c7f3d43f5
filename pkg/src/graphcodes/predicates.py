"""Exact boolean graph tests used as family conditions.

All predicates are total on graphs with enough vertices and evaluate exactly;
there are no heuristics.  Each has a mask-level entry point so that verifiers
can test millions of symmetric differences without building graph objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    LabeledGraph,
    incidence_masks,
    adjacency_masks,
    complete_graph,
    edge_slots,
)
from .errors import CapabilityError, DomainError

DEFAULT_HAMILTONIAN_CAP = 16
PATTERN_CAP = 8

_hamiltonian_cap = DEFAULT_HAMILTONIAN_CAP


def hamiltonian_cap() -> int:
    return _hamiltonian_cap


def set_hamiltonian_cap(limit: int) -> None:
    """Raise or lower the vertex cap for Hamiltonicity backtracking."""
    global _hamiltonian_cap
    if limit < 3:
        raise DomainError("cap must be at least 3")
    _hamiltonian_cap = limit


# ---------------------------------------------------------------------------
# connectivity


def _connected_from_adj(adj: list[int], full: int) -> bool:
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~reached
        reached |= frontier
    return reached == full


def _connected_mask(n: int, bits: int) -> bool:
    return _connected_from_adj(adjacency_masks(n, bits), (1 << n) - 1)


def _biconnected_from_adj(n: int, adj: list[int]) -> bool:
    """No articulation vertex and connected, via one DFS with lowlinks."""
    disc = [0] * n
    low = [0] * n
    timer = 1
    disc[0] = low[0] = 1
    root_children = 0
    stack = [(0, -1)]
    pending = [adj[0]]
    while stack:
        v, parent = stack[-1]
        m = pending[-1]
        if m:
            lowbit = m & -m
            u = lowbit.bit_length() - 1
            pending[-1] = m ^ lowbit
            if u == parent:
                continue
            if disc[u]:
                if disc[u] < low[v]:
                    low[v] = disc[u]
            else:
                timer += 1
                disc[u] = low[u] = timer
                if v == 0:
                    root_children += 1
                stack.append((u, v))
                pending.append(adj[u])
        else:
            stack.pop()
            pending.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return False
    if root_children > 1:
        return False
    return all(disc)


def _flow_key(a: int, b: int) -> int:
    return (a << 8) | b


def _max_flow_at_most(n: int, adj: list[int], s: int, t: int, cap: int) -> int:
    """Internally vertex-disjoint s-t paths, counted up to ``cap``.

    Unit-capacity max flow on the vertex-split digraph (Menger): node v splits
    into in(v)=v and out(v)=v+n with an internal arc of capacity 1 (unbounded
    for s and t); each edge uv gives arcs out(u)->in(v) and out(v)->in(u) of
    unbounded capacity.  Callers only pass non-adjacent pairs, so every
    augmenting path crosses a unit internal arc and augments by exactly 1.
    """
    if cap <= 0:
        return 0
    big = n
    nbrs: list[list[int]] = [[] for _ in range(2 * n)]
    residual: dict[int, int] = {}

    def arc(a: int, b: int, c: int) -> None:
        ka, kb = _flow_key(a, b), _flow_key(b, a)
        if ka not in residual:
            residual[ka] = 0
            residual.setdefault(kb, 0)
            nbrs[a].append(b)
            nbrs[b].append(a)
        residual[ka] += c

    for v in range(n):
        arc(v, v + n, big if v == s or v == t else 1)
        m = adj[v]
        while m:
            lowbit = m & -m
            arc(v + n, lowbit.bit_length() - 1, big)
            m ^= lowbit
    source, sink = s + n, t
    flow = 0
    while flow < cap:
        parent = [-1] * (2 * n)
        parent[source] = source
        dq = deque([source])
        found = False
        while dq:
            a = dq.popleft()
            if a == sink:
                found = True
                break
            for b in nbrs[a]:
                if parent[b] < 0 and residual[_flow_key(a, b)] > 0:
                    parent[b] = a
                    dq.append(b)
        if not found:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[_flow_key(a, b)] -= 1
            residual[_flow_key(b, a)] += 1
            b = a
        flow += 1
    return flow


def _cut_pairs(n: int, adj: list[int]) -> list[tuple[int, int]]:
    """Pairs whose local connectivity minimum equals the global one.

    Fix a minimum-degree vertex v.  Any minimum vertex cut either avoids v
    (then it separates v from some non-neighbor) or contains v (then it
    separates two non-adjacent neighbors of v), so checking v against its
    non-neighbors plus all non-adjacent pairs of its neighbors suffices.
    """
    full = (1 << n) - 1
    v = min(range(n), key=lambda u: (adj[u].bit_count(), u))
    pairs = []
    m = full & ~adj[v] & ~(1 << v)
    while m:
        lowbit = m & -m
        pairs.append((v, lowbit.bit_length() - 1))
        m ^= lowbit
    nbr_list = []
    m = adj[v]
    while m:
        lowbit = m & -m
        nbr_list.append(lowbit.bit_length() - 1)
        m ^= lowbit
    for ai in range(len(nbr_list)):
        a = nbr_list[ai]
        for bi in range(ai + 1, len(nbr_list)):
            b = nbr_list[bi]
            if not adj[a] >> b & 1:
                pairs.append((a, b))
    return pairs


def _kappa_mask(n: int, bits: int, cap: int | None = None) -> int:
    """min(vertex connectivity, cap); complete graphs count as (n-1)-connected."""
    limit = n - 1 if cap is None else min(cap, n - 1)
    if bits == (1 << edge_slots(n)) - 1:
        return limit
    adj = adjacency_masks(n, bits)
    best = limit
    for s, t in _cut_pairs(n, adj):
        f = _max_flow_at_most(n, adj, s, t, best)
        if f < best:
            best = f
            if best == 0:
                break
    return best


def _is_k_connected_mask(n: int, bits: int, k: int) -> bool:
    if n < k + 1:
        return False
    if 2 * bits.bit_count() < k * n:  # handshake: min degree k needs kn/2 edges
        return False
    if k == 1:
        return _connected_mask(n, bits)
    adj = adjacency_masks(n, bits)
    if min(a.bit_count() for a in adj) < k:
        return False
    if k == 2:
        return _biconnected_from_adj(n, adj)
    if bits == (1 << edge_slots(n)) - 1:
        return True
    for s, t in _cut_pairs(n, adj):
        if _max_flow_at_most(n, adj, s, t, k) < k:
            return False
    return True


# ---------------------------------------------------------------------------
# Hamiltonicity (exact backtracking with reachability pruning)


def _ham_reach_ok(adj: list[int], cur: int, unvisited: int) -> bool:
    reach = adj[cur] & unvisited
    if reach != unvisited:
        if not reach:
            return False
        frontier = reach
        while frontier:
            nxt = 0
            m = frontier
            while m:
                lowbit = m & -m
                nxt |= adj[lowbit.bit_length() - 1]
                m ^= lowbit
            frontier = nxt & unvisited & ~reach
            reach |= frontier
        if reach != unvisited:
            return False
    return True


def _ham_cycle_mask(n: int, bits: int) -> bool:
    adj = adjacency_masks(n, bits)
    full = (1 << n) - 1
    if any(a.bit_count() < 2 for a in adj):
        return False
    if not _connected_from_adj(adj, full):
        return False

    def rec(cur: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[cur] & 1)
        unvisited = full & ~visited
        if not _ham_reach_ok(adj, cur, unvisited):
            return False
        avail = unvisited | (1 << cur) | 1
        m = unvisited
        while m:
            lowbit = m & -m
            if (adj[lowbit.bit_length() - 1] & avail).bit_count() < 2:
                return False
            m ^= lowbit
        cand = adj[cur] & unvisited
        while cand:
            lowbit = cand & -cand
            if rec(lowbit.bit_length() - 1, visited | lowbit):
                return True
            cand ^= lowbit
        return False

    return rec(0, 1)


def _ham_path_mask(n: int, bits: int) -> bool:
    adj = adjacency_masks(n, bits)
    full = (1 << n) - 1
    if not _connected_from_adj(adj, full):
        return False
    if n <= 2:
        return True

    def rec(cur: int, visited: int) -> bool:
        if visited == full:
            return True
        unvisited = full & ~visited
        if not _ham_reach_ok(adj, cur, unvisited):
            return False
        cand = adj[cur] & unvisited
        while cand:
            lowbit = cand & -cand
            if rec(lowbit.bit_length() - 1, visited | lowbit):
                return True
            cand ^= lowbit
        return False

    return any(rec(s, 1 << s) for s in range(n))


# ---------------------------------------------------------------------------
# spanning star, subgraph containment, odd cycles


def _spanning_star_mask(n: int, bits: int) -> bool:
    for inc in incidence_masks(n):
        if bits & inc == inc:
            return True
    return False


def _pattern_order(pn: int, padj: list[int]) -> list[int]:
    degs = [padj[v].bit_count() for v in range(pn)]
    order = [max(range(pn), key=lambda v: (degs[v], -v))]
    placed = 1 << order[0]
    while len(order) < pn:
        best = max(
            (v for v in range(pn) if not placed >> v & 1),
            key=lambda v: ((padj[v] & placed).bit_count(), degs[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def _contains_mask(n: int, bits: int, pn: int, pbits: int, induced: bool) -> bool:
    if pn > n:
        return False
    padj = adjacency_masks(pn, pbits)
    hadj = adjacency_masks(n, bits)
    hdeg = [hadj[v].bit_count() for v in range(n)]
    pdeg = [padj[v].bit_count() for v in range(pn)]
    order = _pattern_order(pn, padj)
    mapping = [-1] * pn

    def place(k: int, used: int) -> bool:
        if k == pn:
            return True
        p = order[k]
        need = pdeg[p]
        for h in range(n):
            if used >> h & 1 or hdeg[h] < need:
                continue
            ok = True
            for qi in range(k):
                q = order[qi]
                p_edge = padj[p] >> q & 1
                h_edge = hadj[h] >> mapping[q] & 1
                if p_edge != h_edge and (p_edge or induced):
                    ok = False
                    break
            if ok:
                mapping[p] = h
                if place(k + 1, used | (1 << h)):
                    return True
        return False

    return place(0, 0)


def _odd_cycle_mask(n: int, bits: int) -> bool:
    """True iff some component is not two-colorable."""
    adj = adjacency_masks(n, bits)
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            m = adj[v]
            while m:
                lowbit = m & -m
                u = lowbit.bit_length() - 1
                m ^= lowbit
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    dq.append(u)
                elif color[u] == color[v]:
                    return True
    return False


# ---------------------------------------------------------------------------
# public operations


def is_connected(g: LabeledGraph) -> bool:
    """One component covering every vertex (isolated vertices disconnect)."""
    if g.n < 2:
        raise DomainError("connectivity needs at least 2 vertices")
    return _connected_mask(g.n, g.bits)


def vertex_connectivity(g: LabeledGraph) -> int:
    """Minimum vertex cut size; n-1 for complete graphs."""
    if g.n < 2:
        raise DomainError("connectivity needs at least 2 vertices")
    return _kappa_mask(g.n, g.bits)


def is_k_connected(g: LabeledGraph, k: int) -> bool:
    if g.n < 2:
        raise DomainError("connectivity needs at least 2 vertices")
    if k < 1:
        raise DomainError("k must be at least 1")
    return _is_k_connected_mask(g.n, g.bits, k)


def _check_ham_cap(n: int) -> None:
    if n > _hamiltonian_cap:
        raise CapabilityError(
            f"n={n} exceeds the Hamiltonicity cap {_hamiltonian_cap}; "
            "raise it with set_hamiltonian_cap"
        )


def has_hamiltonian_path(g: LabeledGraph) -> bool:
    if g.n < 2:
        raise DomainError("a Hamiltonian path needs at least 2 vertices")
    _check_ham_cap(g.n)
    return _ham_path_mask(g.n, g.bits)


def has_hamiltonian_cycle(g: LabeledGraph) -> bool:
    if g.n < 3:
        raise DomainError("a Hamiltonian cycle needs at least 3 vertices")
    _check_ham_cap(g.n)
    return _ham_cycle_mask(g.n, g.bits)


def has_spanning_star(g: LabeledGraph) -> bool:
    """Some vertex adjacent to all others (degree n-1)."""
    if g.n < 2:
        raise DomainError("a spanning star needs at least 2 vertices")
    return _spanning_star_mask(g.n, g.bits)


def _check_pattern(pattern: LabeledGraph, need_edge: bool) -> None:
    if pattern.n > PATTERN_CAP:
        raise CapabilityError(
            f"pattern on {pattern.n} vertices exceeds the cap {PATTERN_CAP}"
        )
    if need_edge and pattern.is_empty:
        raise DomainError("subgraph containment needs a pattern with an edge")


def contains_subgraph(g: LabeledGraph, pattern: LabeledGraph) -> bool:
    """Exact (not necessarily induced) subgraph isomorphism by backtracking."""
    _check_pattern(pattern, need_edge=True)
    return _contains_mask(g.n, g.bits, pattern.n, pattern.bits, induced=False)


def contains_induced(g: LabeledGraph, pattern: LabeledGraph) -> bool:
    """Exact induced subgraph isomorphism by backtracking."""
    _check_pattern(pattern, need_edge=False)
    return _contains_mask(g.n, g.bits, pattern.n, pattern.bits, induced=True)


def has_odd_cycle(g: LabeledGraph) -> bool:
    return _odd_cycle_mask(g.n, g.bits)


# ---------------------------------------------------------------------------
# predicate objects


@dataclass(frozen=True, slots=True)
class Predicate:
    """A named total boolean test on labeled graphs."""

    name: str
    kind: str
    k: int | None = None
    pattern: LabeledGraph | None = None

    def test_mask(self, n: int, bits: int) -> bool:
        kind = self.kind
        if kind == "connected":
            if n < 2:
                raise DomainError("connectivity needs at least 2 vertices")
            return _connected_mask(n, bits)
        if kind == "kconn":
            if n < 2:
                raise DomainError("connectivity needs at least 2 vertices")
            return _is_k_connected_mask(n, bits, self.k)
        if kind == "hampath":
            if n < 2:
                raise DomainError("a Hamiltonian path needs at least 2 vertices")
            _check_ham_cap(n)
            return _ham_path_mask(n, bits)
        if kind == "hamcycle":
            if n < 3:
                raise DomainError("a Hamiltonian cycle needs at least 3 vertices")
            _check_ham_cap(n)
            return _ham_cycle_mask(n, bits)
        if kind == "star":
            if n < 2:
                raise DomainError("a spanning star needs at least 2 vertices")
            return _spanning_star_mask(n, bits)
        if kind == "contains":
            return _contains_mask(n, bits, self.pattern.n, self.pattern.bits, False)
        if kind == "contains-induced":
            return _contains_mask(n, bits, self.pattern.n, self.pattern.bits, True)
        if kind == "oddcycle":
            return _odd_cycle_mask(n, bits)
        raise DomainError(f"unknown predicate kind {kind!r}")

    def test(self, g: LabeledGraph) -> bool:
        return self.test_mask(g.n, g.bits)

    def __call__(self, g: LabeledGraph) -> bool:
        return self.test(g)


def k_connected(k: int) -> Predicate:
    if k < 1:
        raise DomainError("k must be at least 1")
    name = f"{k}conn" if k in (2, 3) else f"kconn:{k}"
    return Predicate(name, "kconn", k=k)


def contains(pattern: LabeledGraph, name: str | None = None) -> Predicate:
    _check_pattern(pattern, need_edge=True)
    return Predicate(name or f"sub:{pattern.n}v/{pattern.to_hex()}", "contains",
                     pattern=pattern)


def contains_induced_pred(pattern: LabeledGraph, name: str | None = None) -> Predicate:
    _check_pattern(pattern, need_edge=False)
    return Predicate(name or f"indsub:{pattern.n}v/{pattern.to_hex()}",
                     "contains-induced", pattern=pattern)


CONNECTED = Predicate("connected", "connected")
TWO_CONNECTED = k_connected(2)
THREE_CONNECTED = k_connected(3)
HAMPATH = Predicate("hampath", "hampath")
HAMCYCLE = Predicate("hamcycle", "hamcycle")
STAR = Predicate("star", "star")
ODDCYCLE = Predicate("oddcycle", "oddcycle")
K3 = contains(complete_graph(3), "k3")


def parse_predicate(text: str, pattern_loader=None) -> Predicate:
    """Resolve a CLI predicate name.

    Accepted: connected, 2conn, 3conn, kconn:<k>, hampath, hamcycle, star,
    k3, oddcycle, sub:<pattern-file>, indsub:<pattern-file>.
    """
    fixed = {
        "connected": CONNECTED,
        "2conn": TWO_CONNECTED,
        "3conn": THREE_CONNECTED,
        "hampath": HAMPATH,
        "hamcycle": HAMCYCLE,
        "star": STAR,
        "k3": K3,
        "oddcycle": ODDCYCLE,
    }
    if text in fixed:
        return fixed[text]
    if text.startswith("kconn:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise DomainError(f"bad k in {text!r}") from exc
        return k_connected(k)
    if text.startswith(("sub:", "indsub:")):
        kind, path = text.split(":", 1)
        if pattern_loader is None:
            pattern_loader = _default_pattern_loader
        pattern = pattern_loader(path)
        if kind == "sub":
            return contains(pattern, name=text)
        return contains_induced_pred(pattern, name=text)
    raise DomainError(f"unknown predicate {text!r}")


def _default_pattern_loader(path: str) -> LabeledGraph:
    from .family import load_family

    loaded = load_family(path)
    if len(loaded.graphs) != 1:
        raise DomainError(f"pattern file {path} must hold exactly one graph")
    return loaded.graphs[0]
