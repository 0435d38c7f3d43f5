from math import comb

import pytest

from graphcodes import (
    CapabilityError,
    DomainError,
    UnsupportedParameterError,
    complete_bipartite_graph,
    complete_graph,
    edge_slots,
    empty_graph,
    graph_from_edges,
    has_spanning_star,
)
from graphcodes import constructions as C
from graphcodes.factorization import starter_factorization
from graphcodes.linalg import enumerate_span


def test_split_clique_small():
    fam = C.split_clique_family(3)
    expected = {
        complete_graph(3).bits,
        graph_from_edges(3, [(1, 2)]).bits,
        graph_from_edges(3, [(1, 3)]).bits,
        graph_from_edges(3, [(2, 3)]).bits,
    }
    assert set(fam.masks()) == expected


@pytest.mark.parametrize("n", range(2, 11))
def test_split_clique_sizes(n):
    assert len(C.split_clique_family(n)) == 1 << (n - 1)


def test_split_clique_diffs_are_complete_bipartite():
    fam = C.split_clique_family(5)
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            diff = fam[i] ^ fam[j]
            # reconstruct a candidate bipartition from vertex 1's neighbors
            side = {v for v in range(2, 6) if not diff.has_edge(1, v)} | {1}
            assert diff == complete_bipartite_graph(5, side)


def test_even_split_small():
    fam = C.even_split_family(4)
    assert len(fam) == 4
    assert complete_graph(4).bits in fam.masks()
    with pytest.raises(DomainError):
        C.even_split_family(5)


@pytest.mark.parametrize("n,size", [(4, 4), (6, 16), (8, 64), (10, 256)])
def test_even_split_sizes(n, size):
    assert len(C.even_split_family(n)) == size


@pytest.mark.parametrize("n,size", [(3, 2), (5, 5), (7, 22), (9, 93)])
def test_odd_two_conn_sizes(n, size):
    fam = C.odd_two_conn_family(n)
    assert len(fam) == size
    assert size == ((1 << (n - 2)) - comb(n - 2, (n - 3) // 2) if n > 3 else 2)


def test_odd_two_conn_small_members():
    fam = C.odd_two_conn_family(3)
    assert set(fam.masks()) == {0, complete_graph(3).bits}
    with pytest.raises(DomainError):
        C.odd_two_conn_family(4)


def test_hamming_code_small():
    n, basis = C.hamming_code(3)
    assert n == 7
    assert len(basis) == 4
    assert C.hamming_minimum_distance(3) == 3
    assert C.hamming_minimum_distance(4) == 3


def test_hamming_family_collapses_at_k2():
    fam = C.hamming_bipartite_family(2)
    assert fam.rank == 0
    assert enumerate_span(fam).graphs == (empty_graph(3),)


def test_hamming_family_k3_members():
    fam = C.hamming_bipartite_family(3)
    assert fam.rank == 3
    span = enumerate_span(fam)
    assert len(span) == 8
    for g in span:
        if g.is_empty:
            continue
        # nonzero members are complete bipartite K_{3,4}
        assert sorted(set(g.degree_sequence())) == [3, 4]
        assert g.num_edges == 12


def test_hamming_family_k4_rank():
    assert C.hamming_bipartite_family(4).rank == 10


def test_ham_cycle_family_m4():
    fam = C.ham_cycle_family(4)
    span = enumerate_span(fam)
    assert len(span) == 4
    cycles = [g for g in span if not g.is_empty]
    assert all(g.num_edges == 4 and set(g.degree_sequence()) == {2} for g in cycles)


def test_ham_families_reject_bad_parameters():
    with pytest.raises(UnsupportedParameterError):
        C.ham_cycle_family(10)  # 9 composite
    with pytest.raises(DomainError):
        C.ham_cycle_family(7)
    with pytest.raises(UnsupportedParameterError):
        C.ham_path_family(9)
    with pytest.raises(UnsupportedParameterError):
        C.ham_path_family(2)


def test_ham_path_family_truncation():
    fam = C.ham_path_family(7)
    assert fam.n == 7
    assert fam.rank == 6
    for g in fam.basis:
        assert g.num_edges <= 6


@pytest.mark.parametrize("n,size", [(2, 2), (3, 4), (4, 4), (5, 6), (6, 6), (9, 10)])
def test_star_family_sizes(n, size):
    assert len(C.star_family(n)) == size


@pytest.mark.parametrize("n", [5, 6])
def test_star_family_center_matches_auxiliary_coloring(n):
    fam = C.star_family(n)
    aux = n + 1 if n % 2 else n
    mats = starter_factorization(aux).matchings
    for h in range(1, len(fam) + 1):
        for k in range(h + 1, len(fam) + 1):
            color = next(
                idx + 1
                for idx, mat in enumerate(mats)
                if mat.has_edge(h, k)
            )
            diff = fam[h - 1] ^ fam[k - 1]
            assert diff.degree(color) == n - 1
            assert has_spanning_star(diff)


def test_k3_family_4_exact_graphs():
    fam = C.k3_family_4()
    assert fam[0] == empty_graph(4)
    assert set(fam[1].edges()) == {(1, 2), (2, 3), (1, 3), (3, 4)}
    assert set(fam[2].edges()) == {(2, 3), (3, 4), (2, 4), (1, 4)}
    assert set(fam[3].edges()) == {(1, 2), (1, 3), (2, 4), (1, 4)}
    # closed under symmetric difference
    masks = set(fam.masks())
    assert all(a ^ b in masks for a in masks for b in masks)


def test_k3_and_codd_span_sizes():
    assert C.k3_family_5().span_size == 16
    assert C.k3_family_6().span_size == 64
    assert C.codd_family_7().span_size == 512
    assert len(C.k3_family_3()) == 2


def test_clique_agreement_family():
    assert len(C.clique_agreement_family(3, 2)) == 4
    fam = C.clique_agreement_family(4, 3)
    assert len(fam) == 8
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            diff = fam[i] ^ fam[j]
            for a in range(1, 4):
                for b in range(a + 1, 4):
                    assert not diff.has_edge(a, b)
    with pytest.raises(CapabilityError):
        C.clique_agreement_family(9, 2, budget=1 << 10)


def test_dual_family_sizes():
    assert len(C.dual_isolated_family(4)) == 8
    assert len(C.dual_pendant_family(4)) == 16
    assert len(C.dual_lowdeg_family(4)) == 32
    assert len(C.dual_star_family(4)) == 16
    assert C.dual_isolated_size(5) == 2 ** 6
    assert C.dual_lowdeg_size(5) == 5 * 2 ** 6
    assert C.dual_star_size(5) == 2 ** 7


def test_dual_members_have_required_shape():
    for g in C.dual_isolated_family(4):
        assert g.degree(4) == 0
    for g in C.dual_pendant_family(4):
        assert g.degree(4) <= 1
        assert g.degree(4) == 0 or g.has_edge(3, 4)
    for g in C.dual_lowdeg_family(4):
        assert g.degree(4) <= 1
    cover = C.star_cover_edges(5)
    assert cover == [(1, 2), (3, 4), (4, 5)]
    for g in C.dual_star_family(5):
        for e in cover:
            assert g.has_edge(*e)


def test_dual_subgraph_family():
    host = complete_bipartite_graph(5, {1, 2})
    fam = C.dual_subgraph_family(5, host)
    assert len(fam) == 64
    for g in fam:
        assert g.bits & ~host.bits == 0
    with pytest.raises(DomainError):
        C.dual_subgraph_family(4, host)


def test_enumeration_budget():
    with pytest.raises(CapabilityError):
        C.dual_isolated_family(9, budget=1 << 20)


def test_implicit_families():
    import random

    imp = C.dual_star_implicit(8)
    assert imp.log2_size == edge_slots(8) - 4
    rng = random.Random(0)
    for _ in range(20):
        g = imp.sample(rng)
        assert imp.contains(g)
        for e in C.star_cover_edges(8):
            assert g.has_edge(*e)
    assert not imp.contains(empty_graph(8))
    iso = C.dual_isolated_implicit(5)
    assert iso.log2_size == edge_slots(4)
    assert iso.contains(empty_graph(5))


@pytest.mark.parametrize("n", range(3, 9))
def test_product_saturation(n):
    primal = 1 << (n - 1)
    dual = C.dual_isolated_size(n)
    assert primal * dual == 1 << edge_slots(n)


def test_complement_closure_of_split_clique():
    fam = C.split_clique_family(4)
    complemented = [g.complement() for g in fam]
    masks = {g.bits for g in complemented}
    assert 0 in masks
    assert all(a ^ b in masks for a in masks for b in masks)
    for g, h in zip(fam, complemented):
        for g2, h2 in zip(fam, complemented):
            assert g ^ g2 == h ^ h2
