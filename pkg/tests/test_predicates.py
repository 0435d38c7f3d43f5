import random

import pytest

from graphcodes import (
    CapabilityError,
    DomainError,
    LabeledGraph,
    complete_bipartite_graph,
    complete_graph,
    contains_induced,
    contains_subgraph,
    cycle_graph,
    edge_slots,
    empty_graph,
    graph_from_edges,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    has_odd_cycle,
    has_spanning_star,
    is_connected,
    is_k_connected,
    k_connected,
    parse_predicate,
    path_graph,
    star_graph,
    vertex_connectivity,
)
from graphcodes import predicates as P
from graphcodes.constructions import k3_family_5, star_family, starter_factorization
from graphcodes.oracles import oracle_vertex_connectivity


def pad(g, n):
    """The same edge set viewed on a larger vertex set."""
    return graph_from_edges(n, g.edges())


def test_is_connected_examples():
    assert is_connected(path_graph(3))
    assert not is_connected(pad(graph_from_edges(2, [(1, 2)]), 3))
    assert not is_connected(empty_graph(4))
    with pytest.raises(DomainError):
        is_connected(empty_graph(1))


def test_vertex_connectivity_examples():
    assert vertex_connectivity(cycle_graph(4)) == 2
    k34 = complete_bipartite_graph(7, {1, 2, 3})
    assert vertex_connectivity(k34) == 3
    assert oracle_vertex_connectivity(k34) == 3
    assert vertex_connectivity(complete_graph(5)) == 4


def test_degree_one_vertex_blocks_two_connectivity():
    g = graph_from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    assert not is_k_connected(g, 2)
    assert is_k_connected(g, 1)


@pytest.mark.parametrize("a", range(1, 7))
def test_complete_bipartite_connectivity_closed_form(a):
    for b in range(a, 7):
        g = complete_bipartite_graph(a + b, set(range(1, a + 1)))
        assert vertex_connectivity(g) == a


def test_is_k_connected_needs_enough_vertices():
    assert not is_k_connected(complete_graph(3), 3)
    assert is_k_connected(complete_graph(4), 3)
    with pytest.raises(DomainError):
        is_k_connected(complete_graph(3), 0)


def test_hamiltonian_examples():
    mats = starter_factorization(8).matchings
    assert has_hamiltonian_cycle(mats[0] ^ mats[3])
    assert not has_hamiltonian_path(star_graph(5))
    assert has_hamiltonian_path(cycle_graph(5))
    assert has_hamiltonian_cycle(cycle_graph(5))
    assert not has_hamiltonian_cycle(path_graph(5))


def test_hamiltonian_cap():
    P.set_hamiltonian_cap(10)
    try:
        with pytest.raises(CapabilityError):
            has_hamiltonian_path(empty_graph(11))
    finally:
        P.set_hamiltonian_cap(P.DEFAULT_HAMILTONIAN_CAP)
    assert has_hamiltonian_path(cycle_graph(12))


def test_spanning_star_examples():
    assert has_spanning_star(star_graph(6))
    assert not has_spanning_star(cycle_graph(6))
    fam = star_family(5)
    assert has_spanning_star(fam[0] ^ fam[1])


def test_contains_examples():
    assert contains_subgraph(complete_graph(4), complete_graph(3))
    assert not contains_induced(complete_graph(4), path_graph(3))
    assert contains_induced(complete_graph(4), complete_graph(3))
    gens = k3_family_5().basis
    g12 = gens[0] ^ gens[1]
    for edge in [(1, 2), (2, 4), (1, 4)]:
        assert g12.has_edge(*edge)
    assert contains_subgraph(g12, complete_graph(3))


def test_contains_pattern_rules():
    with pytest.raises(DomainError):
        contains_subgraph(complete_graph(4), empty_graph(3))
    assert contains_induced(complete_graph(2), empty_graph(3)) is False
    assert contains_induced(empty_graph(4), empty_graph(3))
    with pytest.raises(CapabilityError):
        contains_subgraph(complete_graph(10), complete_graph(9))


def test_odd_cycle_examples():
    assert has_odd_cycle(cycle_graph(7))
    assert not has_odd_cycle(complete_bipartite_graph(7, {1, 2, 3}))
    assert not has_odd_cycle(empty_graph(5))


def test_odd_cycle_matches_odd_cycle_containment():
    rng = random.Random(7)
    patterns = [cycle_graph(3), cycle_graph(5), cycle_graph(7)]
    for _ in range(300):
        g = LabeledGraph(7, rng.getrandbits(21))
        expected = any(contains_subgraph(g, c) for c in patterns)
        assert has_odd_cycle(g) == expected


def test_locality_of_local_predicates():
    rng = random.Random(11)
    k3 = complete_graph(3)
    p3 = path_graph(3)
    for _ in range(300):
        g = LabeledGraph(7, rng.getrandbits(21))
        size = rng.randint(3, 7)
        subset = sorted(rng.sample(range(1, 8), size))
        sub = g.induced_subgraph(subset)
        if contains_subgraph(sub, k3):
            assert contains_subgraph(g, k3)
        if contains_induced(sub, p3):
            assert contains_induced(g, p3)
        if has_odd_cycle(sub):
            assert has_odd_cycle(g)


def test_implication_chain_on_random_graphs():
    rng = random.Random(13)
    for _ in range(300):
        g = LabeledGraph(7, rng.getrandbits(21))
        if has_hamiltonian_cycle(g):
            assert is_k_connected(g, 2)
        if is_k_connected(g, 2):
            assert is_connected(g)
        if has_hamiltonian_path(g):
            assert is_connected(g)
        if has_spanning_star(g):
            assert is_connected(g)


def test_containment_monotone_under_edge_addition():
    rng = random.Random(17)
    k3 = complete_graph(3)
    for _ in range(200):
        bits = rng.getrandbits(15)
        g = LabeledGraph(6, bits)
        slot = rng.randrange(edge_slots(6))
        bigger = LabeledGraph(6, bits | 1 << slot)
        if contains_subgraph(g, k3):
            assert contains_subgraph(bigger, k3)


def test_parse_predicate_names():
    assert parse_predicate("connected").kind == "connected"
    assert parse_predicate("2conn").k == 2
    assert parse_predicate("kconn:4").k == 4
    assert parse_predicate("k3").pattern == complete_graph(3)
    assert parse_predicate("hamcycle").kind == "hamcycle"
    with pytest.raises(DomainError):
        parse_predicate("nonsense")


def test_parse_predicate_pattern_file(tmp_path):
    from graphcodes import save_family

    path = tmp_path / "pat.json"
    save_family(path, 3, [path_graph(3)])
    pred = parse_predicate(f"indsub:{path}")
    assert pred.kind == "contains-induced"
    assert pred.pattern == path_graph(3)


def test_predicate_domain_guards():
    with pytest.raises(DomainError):
        parse_predicate("hamcycle").test(empty_graph(2))
    with pytest.raises(DomainError):
        parse_predicate("connected").test(empty_graph(1))


def test_vertex_limit_is_configurable():
    import graphcodes.core as core

    core.set_vertex_limit(5)
    try:
        with pytest.raises(CapabilityError):
            empty_graph(6)
    finally:
        core.set_vertex_limit(core.DEFAULT_VERTEX_LIMIT)
    assert empty_graph(6).n == 6
