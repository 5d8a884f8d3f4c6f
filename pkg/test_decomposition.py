#!/usr/bin/env python3
"""
Tests for f-ranks, unique decompositions, enumeration and random generation
"""

import random
from math import comb

import pytest

from valuta.errors import InfeasibleParameters, MixedStratum, SizeCapExceeded
from valuta.models import Matroid, parse_descriptor, parse_poly
from valuta.services import (
    decomposition_service,
    family_service,
    generation_service,
    invariant_service,
    isomorphism_service,
)


def terms_of(decomposition):
    return {str(d): c for d, c in decomposition.terms}


# Enumeration

def test_enumeration_counts_for_five_elements():
    counts = [len(generation_service.enumerate_matroids(5, k)) for k in range(6)]
    assert counts == [1, 5, 13, 13, 5, 1]


def test_rank_two_on_four_has_seven_classes():
    assert len(generation_service.enumerate_matroids(4, 2)) == 7


@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (4, 1)])
def test_fast_and_slow_enumeration_agree(n, k):
    fast = generation_service.enumerate_matroids(n, k)
    slow = generation_service.enumerate_matroids_slow(n, k)
    assert len(fast) == len(slow)
    forms = {isomorphism_service.canonical_form(M) for M in fast}
    assert forms == {isomorphism_service.canonical_form(M) for M in slow}


def test_labeled_enumeration_matches_slow_path():
    labeled = generation_service.enumerate_matroids(4, 2, up_to_iso=False)
    assert set(labeled) == set(generation_service.enumerate_matroids_slow(4, 2, up_to_iso=False))


def test_enumeration_caps():
    with pytest.raises(SizeCapExceeded):
        generation_service.enumerate_matroids(7, 3)
    with pytest.raises(SizeCapExceeded):
        generation_service.enumerate_matroids(8, 3, force=True)


# Isomorphism

def test_canonical_form_is_relabel_invariant(m42):
    for M in m42.values():
        shuffled = M.relabel([3, 1, 4, 2])
        assert isomorphism_service.canonical_form(M) == isomorphism_service.canonical_form(shuffled)
        assert isomorphism_service.is_isomorphic(M, shuffled)
    assert not isomorphism_service.is_isomorphic(m42["T24"], m42["U24"])


def test_minor_search(m42):
    M = Matroid.uniform(2, 4).direct_sum(Matroid.uniform(1, 1))
    assert isomorphism_service.has_minor_iso(M, m42["U24"])
    assert isomorphism_service.has_minor_iso(M, m42["U13+U11"])
    assert not isomorphism_service.has_minor_iso(m42["U24"], m42["T24"])


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 3)])
def test_canonical_form_survives_random_relabelings(n, k):
    M = generation_service.random_matroid(n, k, "sparse_paving", n)
    form = isomorphism_service.canonical_form(M)
    rng = random.Random(n * 100 + k)
    for _ in range(100):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert isomorphism_service.canonical_form(M.relabel(perm)) == form, perm


def test_minor_search_on_disconnected_matroids(m42):
    M = Matroid.uniform(1, 2).direct_sum(Matroid.uniform(1, 2)).direct_sum(Matroid.uniform(0, 1))
    assert isomorphism_service.has_minor_iso(M, m42["U01+U12+U11"])
    assert not isomorphism_service.has_minor_iso(m42["T24"], m42["U01+U12+U11"])


# Ranks

def test_ranks_of_rank_two_on_four():
    stratum = generation_service.enumerate_matroids(4, 2)
    assert decomposition_service.invariant_rank(stratum, "tutte") == 5
    assert decomposition_service.invariant_rank(stratum, "ginv") == 6


@pytest.mark.parametrize("n", [3, 4, 5])
def test_full_strata_ranks(n):
    for k in range(n + 1):
        stratum = generation_service.enumerate_matroids(n, k)
        assert decomposition_service.invariant_rank(stratum, "tutte") == k * (n - k) + 1
        assert decomposition_service.invariant_rank(stratum, "ginv") == comb(n, k)


def test_mixed_strata_are_rejected(m42):
    with pytest.raises(MixedStratum):
        decomposition_service.invariant_rank([m42["U24"], Matroid.uniform(1, 3)])


def test_rank_table_single_cell_and_formats():
    table = decomposition_service.rank_table("all", [4], [2], ["tutte", "ginv"])
    assert table.entries[(4, 2)] == {"size": 7, "tutte_rank": 5, "ginv_rank": 6}
    assert table.to_csv() == "n,k,members,tutte_rank,ginv_rank\n4,2,7,5,6\n"
    assert "family: all" in table.to_text()


def test_rank_table_filtered_families():
    split = decomposition_service.rank_table("split", [4], [2], ["tutte"])
    assert split.entries[(4, 2)]["size"] == 6
    assert split.entries[(4, 2)]["tutte_rank"] == 5
    class_u = decomposition_service.rank_table("class-u", [4], [2], ["tutte"])
    assert class_u.entries[(4, 2)]["size"] == 5
    assert class_u.entries[(4, 2)]["tutte_rank"] == 5


def test_expected_ranks():
    assert decomposition_service.expected_t_rank("all", 4, 2) == 5
    assert decomposition_service.expected_g_rank("all", 4, 2) == 6
    assert decomposition_service.expected_t_rank("class-n", 6, 2) == 5
    assert decomposition_service.expected_t_rank("simple", 5, 3) == 3
    # 2 T(T24) = T(U24) + T(U12+U12) drops the class-N rank at (4, 2)
    assert decomposition_service.expected_t_rank("class-n", 4, 2) is None
    generators = [family_service.realize(d) for d in family_service.class_n_generators(4, 2)]
    assert decomposition_service.invariant_rank(generators, "tutte") == 4


def test_rank_table_refuses_full_enumeration_past_the_cap():
    with pytest.raises(SizeCapExceeded):
        decomposition_service.rank_table("all", [7], [3], ["tutte"])


# Decomposition

def test_decompose_non_split_matroid(m42):
    M = m42["U01+U12+U11"]
    decomposition = decomposition_service.decompose(M, "cuspidal")
    assert terms_of(decomposition) == {
        "uniform:2,4": 1,
        "cuspidal:1,2,1,4": 1,
        "cuspidal:1,2,2,4": -2,
        "cuspidal:2,2,3,4": 1,
    }
    assert decomposition.expand() == invariant_service.tutte(M)


def test_decompose_two_parallel_pairs(m42):
    decomposition = decomposition_service.decompose(m42["U12+U12"], "cuspidal")
    assert terms_of(decomposition) == {"cuspidal:1,2,2,4": 2, "uniform:2,4": -1}
    assert decomposition.to_json()["terms"] == [["uniform:2,4", -1], ["cuspidal:1,2,2,4", 2]]


@pytest.mark.parametrize("basis", ["cuspidal", "class_U", "class_T", "class-u"])
def test_every_rank_two_on_four_decomposes(m42, basis):
    for M in m42.values():
        decomposition = decomposition_service.decompose(M, basis)
        assert decomposition.expand() == invariant_service.tutte(M)


@pytest.mark.parametrize("kind", ["cuspidal", "class_U", "class_T"])
def test_family_lists_agree_past_the_isomorphism_cap(monkeypatch, kind):
    expected = family_service.family(kind, 6, 3)
    monkeypatch.setattr(isomorphism_service, "cap", 5)
    assert family_service.family(kind, 6, 3) == expected


def test_decompose_on_eleven_elements():
    assert len(family_service.family("cuspidal", 11, 2)) == 2 * 9 + 1
    assert terms_of(decomposition_service.decompose(Matroid.uniform(2, 11), "cuspidal")) == {"uniform:2,11": 1}
    M = family_service.realize(parse_descriptor("sum:(uniform:1,2)+(uniform:1,9)"))
    decomposition = decomposition_service.decompose(M, "cuspidal")
    assert decomposition.expand() == invariant_service.tutte(M)


def test_decompose_all_keeps_order(m42):
    matroids = list(m42.values())
    batch = decomposition_service.decompose_all(matroids, "class_T", threads=1)
    assert [d.expand() for d in batch] == [invariant_service.tutte(M) for M in matroids]


def test_unknown_basis(m42):
    with pytest.raises(ValueError):
        decomposition_service.decompose(m42["U24"], "class_N_disconnected")


# Random matroids

def test_random_is_deterministic():
    for kind in ("sparse_paving", "graphic", "relaxation_chain"):
        a = generation_service.random_matroid(6, 3, kind, 7)
        b = generation_service.random_matroid(6, 3, kind, 7)
        assert a == b
        assert (a.n, a.k) == (6, 3)


def test_random_sparse_paving_lies_in_the_relaxation_span():
    for seed in range(5):
        M = generation_service.random_matroid(6, 3, "sparse_paving", seed)
        assert M.is_sparse_paving()
        c = comb(6, 3) - len(M.bases)
        assert invariant_service.tutte(M) == invariant_service.tutte(Matroid.uniform(3, 6)) + parse_poly("x*y - x - y").scale(c)
        assert family_service.sparse_paving_g(M) == invariant_service.g_invariant(M)


def test_random_graphic_has_requested_rank():
    M = generation_service.random_matroid(7, 3, "graphic", 11)
    assert (M.n, M.k) == (7, 3)


def test_random_infeasible():
    with pytest.raises(InfeasibleParameters):
        generation_service.random_matroid(3, 5, "graphic", 1)
    with pytest.raises(InfeasibleParameters):
        generation_service.random_matroid(4, 2, "bogus", 1)
