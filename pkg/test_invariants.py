#!/usr/bin/env python3
"""
Tests for Tutte polynomials, G-invariants and the coefficient checks
"""

from math import factorial

import pytest

from valuta.errors import HasLoopOrColoop, InvariantError, SizeCapExceeded
from valuta.models import GInvariantVector, Matroid, increment_keys, parse_poly
from valuta.services import generation_service, invariant_service
from valuta.services.verification import EXPECTED_G, EXPECTED_TUTTE


@pytest.mark.parametrize("name", sorted(EXPECTED_TUTTE))
def test_tutte_of_rank_two_on_four(m42, name):
    assert invariant_service.tutte(m42[name]) == parse_poly(EXPECTED_TUTTE[name])


@pytest.mark.parametrize("name", sorted(EXPECTED_TUTTE))
def test_deletion_contraction_agrees_with_subset_sum(m42, name):
    M = m42[name]
    assert invariant_service.tutte_dc(M) == invariant_service.tutte(M)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_deletion_contraction_on_every_small_matroid(n):
    for k in range(n + 1):
        for M in generation_service.enumerate_matroids(n, k):
            assert invariant_service.tutte_dc(M) == invariant_service.tutte(M), M.to_mtx()


def test_tutte_of_direct_sum_is_the_product(m42):
    pieces = [Matroid.uniform(1, 2), Matroid.uniform(0, 1), Matroid.uniform(2, 3), m42["T24"]]
    for M in pieces:
        for N in pieces:
            assert invariant_service.tutte(M.direct_sum(N)) == invariant_service.tutte(M) * invariant_service.tutte(N)


def test_tutte_of_empty_matroid_is_one():
    assert invariant_service.tutte(Matroid(0, [0])) == 1


def test_tutte_basic_evaluations(m42):
    for M in m42.values():
        T = invariant_service.tutte(M)
        assert T.evaluate(1, 1) == len(M.bases)
        assert T.evaluate(2, 2) == 2 ** M.n
        assert invariant_service.tutte(M.dual()) == T.swap()


def test_rank_generating_polynomial_is_shifted_tutte(m42):
    M = m42["T24"]
    assert invariant_service.rank_generating_polynomial(M) == invariant_service.tutte(M).shift(1, 1)


@pytest.mark.parametrize("name", sorted(EXPECTED_G))
def test_g_invariant_of_rank_two_on_four(m42, name):
    assert invariant_service.g_invariant(m42[name]) == GInvariantVector(4, 2, EXPECTED_G[name])


def test_g_invariant_totals_and_duality(m42):
    for M in m42.values():
        G = invariant_service.g_invariant(M)
        assert G.total() == factorial(4)
        assert G.dual_index() == invariant_service.g_invariant(M.dual())


def test_g_invariant_of_uniform_is_one_symbol():
    G = invariant_service.g_invariant(Matroid.uniform(2, 5))
    assert G.coeffs == {"11000": factorial(5)}


def test_increment_keys_are_descending():
    assert increment_keys(4, 2) == ["1100", "1010", "1001", "0110", "0101", "0011"]
    assert increment_keys(0, 0) == [""]


def test_g_vector_arithmetic_and_json():
    a = GInvariantVector(4, 2, {"1100": 20, "1010": 4})
    b = GInvariantVector(4, 2, {"1100": 16, "1010": 8})
    assert (a - b).coeffs == {"1100": 4, "1010": -4}
    assert 2 * a == a + a
    assert GInvariantVector.from_json(4, 2, a.to_json()) == a
    assert a.to_vector() == [20, 4, 0, 0, 0, 0]
    with pytest.raises(InvariantError):
        GInvariantVector(4, 2, {"111": 1})
    with pytest.raises(InvariantError):
        a + GInvariantVector(4, 1, {"1000": 1})


def test_brylawski_relations(m42):
    for M in m42.values():
        assert invariant_service.brylawski_check(invariant_service.tutte(M), M.n)
    broken = parse_poly("x^2 + y^2 + 2*x + 2*y + 1")
    assert not invariant_service.brylawski_check(broken, 4)
    assert invariant_service.brylawski_residues(broken, 4)[0] == 1


def test_merino_welsh(m42):
    assert invariant_service.merino_welsh_check(m42["U24"])
    assert invariant_service.merino_welsh_check(m42["T24"])
    assert invariant_service.merino_welsh_check(m42["U12+U12"])
    with pytest.raises(HasLoopOrColoop):
        invariant_service.merino_welsh_check(m42["U01+U23"])


def test_size_caps(monkeypatch):
    monkeypatch.setattr(invariant_service, "tutte_cap", 3)
    with pytest.raises(SizeCapExceeded) as info:
        invariant_service.tutte(Matroid.uniform(2, 4))
    assert info.value.module == "invariants"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_g_invariant_of_the_dual_is_reindexed(n):
    for k in range(n + 1):
        for M in generation_service.enumerate_matroids(n, k):
            G = invariant_service.g_invariant(M)
            assert invariant_service.g_invariant(M.dual()) == G.dual_index(), M.to_mtx()
