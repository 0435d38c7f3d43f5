import pytest

from graphcodes import CapabilityError, GraphFamily
from graphcodes import constructions as C
from graphcodes import predicates as P
from graphcodes import search as S
from graphcodes.verify import verify_dual_family, verify_family


def test_max_good_small_values():
    assert S.max_good_family(3, P.K3).optimum == 2
    assert S.max_good_family(4, P.K3).optimum == 4
    assert S.max_good_family(4, P.CONNECTED).optimum == 8


def test_max_good_certificate_verifies():
    result = S.max_good_family(4, P.CONNECTED)
    assert result.status == "exact"
    assert len(result.certificate) == result.optimum
    assert verify_family(result.certificate, P.CONNECTED).passed


def test_max_dual_small_values():
    assert S.max_dual_family(4, P.STAR).optimum == 16
    assert S.max_dual_family(3, P.CONNECTED).optimum == 2
    result = S.max_dual_family(4, P.CONNECTED)
    assert result.optimum == 8
    assert verify_dual_family(result.certificate, P.CONNECTED).passed


def test_search_bracketed_by_construction_and_bound():
    result = S.max_good_family(4, P.CONNECTED)
    assert len(C.split_clique_family(4)) <= result.optimum <= 2 ** 3


def test_certificate_translates():
    result = S.max_good_family(4, P.K3)
    cert = result.certificate
    t = cert[1]
    translated = GraphFamily(4, tuple(sorted((g ^ t for g in cert),
                                             key=lambda g: g.bits)))
    assert len(translated) == len(cert)
    assert verify_family(translated, P.K3).passed


def test_size_limits():
    with pytest.raises(CapabilityError):
        S.max_good_family(6, P.CONNECTED)
    with pytest.raises(CapabilityError):
        S.max_dual_family(5, P.CONNECTED)
    with pytest.raises(CapabilityError):
        S.max_linear_family(9, P.CONNECTED)


def test_budget_exhaustion_reports_timeout():
    result = S.max_good_family(4, P.CONNECTED, budget_nodes=3)
    assert result.status == "timeout"
    assert result.optimum >= 1
    assert verify_family(result.certificate, P.CONNECTED).passed \
        if len(result.certificate) >= 2 else True


def test_max_linear_small():
    r = S.max_linear_family(3, P.K3)
    assert (r.rank, r.optimum, r.status) == (1, 2, "exact")
    r = S.max_linear_family(4, P.K3)
    assert (r.rank, r.optimum) == (2, 4)
    r = S.max_linear_family(4, P.CONNECTED)
    assert (r.rank, r.optimum) == (3, 8)
    assert verify_family(r.certificate, P.CONNECTED).passed


def test_max_linear_never_beats_max_good():
    for pred in (P.K3, P.CONNECTED, P.STAR):
        lin = S.max_linear_family(4, pred)
        good = S.max_good_family(4, pred)
        assert lin.status == good.status == "exact"
        assert lin.optimum <= good.optimum


def test_max_linear_respects_rank_cap():
    r = S.max_linear_family(4, P.CONNECTED, max_rank=2)
    assert r.rank == 2 and r.optimum == 4


def test_linear_timeout_is_labeled():
    r = S.max_linear_family(5, P.K3, budget_nodes=10)
    assert r.status == "timeout"


def test_independence_number_differences_match_clique_agreement():
    # families whose differences all have an independent set of size r;
    # at n=4 the graphs agreeing on an r-clique are optimal for r in {2, 3}
    from graphcodes import empty_graph

    for r in (2, 3):
        pred = P.contains_induced_pred(empty_graph(r), f"indsub:edgeless-{r}")
        result = S.max_good_family(4, pred)
        assert result.status == "exact"
        assert result.optimum == len(C.clique_agreement_family(4, r))
        assert verify_family(result.certificate, pred).passed


@pytest.mark.slow
def test_extended_good_search_n5():
    # flagged extended: candidate set ~728 connected graphs
    result = S.max_good_family(5, P.CONNECTED, budget_nodes=50_000_000)
    if result.status == "exact":
        assert result.optimum == 16


@pytest.mark.slow
def test_linear_3conn_n7_matches_hamming_rank():
    # ~10 minutes single-core: scans the 2^21 masks for 3-connected
    # candidates and stops at the proven rank cap
    result = S.max_linear_family(7, P.THREE_CONNECTED)
    assert result.status == "exact"
    assert result.rank == 3
    assert result.optimum == 8
    assert verify_family(result.certificate, P.THREE_CONNECTED).passed
