#!/usr/bin/env python3
"""
Tests for descriptors, family lists, relaxation and the class tests
"""

import pytest

from valuta.errors import (
    EmptyCusp,
    InadmissibleParameters,
    NotElementarySplit,
    NotStressed,
    ParseError,
    UnsupportedShape,
)
from valuta.models import GInvariantVector, Matroid, MatroidDescriptor, mask_from_elements, parse_descriptor, parse_poly
from valuta.services import (
    decomposition_service,
    family_service,
    generation_service,
    invariant_service,
    isomorphism_service,
)


# Descriptors

def test_descriptor_round_trip():
    for text in ("uniform:2,4", "cuspidal:1,2,2,4", "minimal:2,5",
                 "sum:(uniform:0,1)+(uniform:1,2)+(uniform:1,1)"):
        d = parse_descriptor(text)
        assert str(d) == text
        assert parse_descriptor(str(d)) == d


def test_descriptor_n_and_k():
    d = parse_descriptor("sum:(uniform:1,3)+(cuspidal:1,2,2,4)")
    assert (d.n, d.k) == (7, 3)


def test_direct_sum_drops_empty_blocks_and_collapses():
    U = MatroidDescriptor.uniform
    assert MatroidDescriptor.direct_sum(U(0, 0), U(2, 4)) == U(2, 4)
    assert MatroidDescriptor.direct_sum() == U(0, 0)


@pytest.mark.parametrize("text", ["cuspidal:3,2,2,4", "uniform:5,4", "minimal:0,3", "cuspidal:0,2,3,4"])
def test_inadmissible_parameters(text):
    with pytest.raises(InadmissibleParameters):
        parse_descriptor(text)


@pytest.mark.parametrize("text", ["uniform:1", "bogus:1,2", "uniform", "sum:uniform:1,2", "sum:(uniform:1,2"])
def test_descriptor_parse_errors(text):
    with pytest.raises(ParseError):
        parse_descriptor(text)


def test_cuspidal_realization(m42):
    T24 = family_service.realize(MatroidDescriptor.cuspidal(1, 2, 2, 4))
    assert T24 == m42["T24"]
    assert mask_from_elements([3, 4]) not in T24.bases
    # r = k: Lambda_{k,k,h,n} is U_{k,h} plus n - h loops
    assert family_service.realize(MatroidDescriptor.cuspidal(2, 2, 3, 4)) == m42["U01+U23"].relabel([4, 1, 2, 3])


# Families

@pytest.mark.parametrize("kind", ["cuspidal", "class_U", "class_T"])
@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (5, 2), (5, 3)])
def test_family_sizes(kind, n, k):
    members = family_service.family(kind, n, k)
    assert len(members) == k * (n - k) + 1
    matroids = [family_service.realize(d) for d in members]
    assert len(isomorphism_service.dedupe(matroids)) == len(matroids)
    assert decomposition_service.invariant_rank(matroids, "tutte") == k * (n - k) + 1


def test_class_n_generators_rank():
    generators = [family_service.realize(d) for d in family_service.class_n_generators(6, 2)]
    assert decomposition_service.invariant_rank(generators, "tutte") == 5


def test_unknown_family_kind():
    with pytest.raises(ValueError):
        family_service.family("class_Q", 4, 2)


# Closed forms

@pytest.mark.parametrize("kind", ["cuspidal", "class_U", "class_T"])
def test_closed_forms_match_subset_sum(kind):
    for n in range(1, 6):
        for k in range(n + 1):
            for d in family_service.family(kind, n, k):
                assert family_service.closed_form_tutte(d) == invariant_service.tutte(family_service.realize(d)), str(d)


def test_cuspidal_shifted_example():
    assert family_service.cuspidal_shifted(1, 2, 2, 4) == parse_poly("x^2 + x*y + y^2 + 4*x + 4*y + 5")


def test_minimal_product_form():
    for n, k in [(4, 2), (5, 2), (6, 3)]:
        T = invariant_service.tutte(family_service.realize(MatroidDescriptor.minimal(k, n)))
        assert family_service.minimal_product_form(k, n) == T


def test_single_relaxation_adds_xy_minus_x_minus_y():
    relaxed = invariant_service.tutte(family_service.realize(MatroidDescriptor.cuspidal(1, 3, 3, 6)))
    uniform = invariant_service.tutte(Matroid.uniform(3, 6))
    assert relaxed - uniform == parse_poly("x*y - x - y")


def test_unsupported_closed_form():
    d = parse_descriptor("sum:(uniform:1,2)+(uniform:1,2)")
    with pytest.raises(UnsupportedShape):
        family_service.closed_form_tutte(d)


# Relaxation

def test_relaxing_the_circuit_hyperplane_gives_uniform(m42):
    T24 = m42["T24"]
    report = family_service.stressed_report(T24)
    assert [entry.mask for entry in report.with_cusp] == [mask_from_elements([3, 4])]
    assert report.profile == {(1, 2): 1}
    assert family_service.relax(T24, mask_from_elements([3, 4])) == m42["U24"]


def test_relax_errors(m42):
    with pytest.raises(NotStressed):
        family_service.relax(m42["U12+U12"], mask_from_elements([1, 2, 3]))
    with pytest.raises(EmptyCusp):
        family_service.relax(m42["U24"], mask_from_elements([1, 2]))


def test_relax_all_reaches_uniform_in_either_order(m42):
    for name in ("U24", "T24", "U12+U12", "U13+U11", "U01+U23", "U02+U22"):
        assert family_service.relax_all(m42[name]) == m42["U24"], name
        assert family_service.relax_all(m42[name], descending=True) == m42["U24"], name
    assert not family_service.relax_all(m42["U01+U12+U11"]).is_uniform()


def test_elementary_split_tests(m42):
    assert family_service.is_elementary_split(m42["U12+U12"])
    assert not family_service.is_elementary_split(m42["U01+U12+U11"])
    assert family_service.proper_cyclic_flats_form_clutter(m42["T24"])
    assert not family_service.proper_cyclic_flats_form_clutter(m42["U01+U12+U11"])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_relax_all_ignores_the_order(n):
    for k in range(n + 1):
        for M in generation_service.enumerate_matroids(n, k):
            assert family_service.relax_all(M) == family_service.relax_all(M, descending=True), M.to_mtx()


# Classification

def test_classify_T24(m42):
    report = family_service.classify(m42["T24"])
    assert report.elementary_split and report.class_N and report.class_T and report.schubert
    assert not report.class_U
    assert report.witnesses["class_U"]["minor_name"] == "T24"


def test_classify_disconnected_and_non_split(m42):
    report = family_service.classify(m42["U12+U12"])
    assert report.elementary_split and report.class_N
    assert not report.class_U and not report.class_T
    report = family_service.classify(m42["U01+U12+U11"])
    assert not report.elementary_split
    assert report.witnesses["elementary_split"]["minor_name"] == "U01+U12+U11"


def test_classify_finds_minor_in_larger_matroid():
    M = family_service.realize(parse_descriptor("sum:(uniform:1,3)+(uniform:1,2)"))
    report = family_service.classify(M)
    assert not report.class_N
    witness = report.witnesses["class_N"]
    assert witness["minor_name"] in ("U11+U13", "U01+U23")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_connected_class_n_members_are_sparse_paving(n):
    for k in range(n + 1):
        for M in generation_service.enumerate_matroids(n, k):
            report = family_service.classify(M)
            if report.connected:
                assert report.class_N == report.sparse_paving, M.to_mtx()


# G-invariant identities

def test_sparse_paving_g(m42):
    assert family_service.sparse_paving_g(m42["T24"]) == invariant_service.g_invariant(m42["T24"])
    assert family_service.sparse_paving_g(m42["U24"]) == invariant_service.g_invariant(m42["U24"])


def test_g_split_matches_direct_computation(m42):
    for name in ("U24", "T24", "U12+U12", "U13+U11", "U01+U23", "U02+U22"):
        M = m42[name]
        assert family_service.g_split(M) == invariant_service.g_invariant(M), name
    with pytest.raises(NotElementarySplit):
        family_service.g_split(m42["U01+U12+U11"])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_g_split_uses_only_uniform_and_cuspidal_terms(n):
    for k in range(n + 1):
        for M in generation_service.enumerate_matroids(n, k):
            if not family_service.is_elementary_split(M):
                continue
            terms = family_service.g_split_terms(M)
            assert {d.kind for d in terms} <= {"uniform", "cuspidal"}
            total = GInvariantVector(n, k)
            for d, c in terms.items():
                total = total + invariant_service.g_invariant(family_service.realize(d)).scale(c)
            assert total == invariant_service.g_invariant(M)


def test_g_split_terms_of_T24(m42):
    assert {str(d): c for d, c in family_service.g_split_terms(m42["T24"]).items()} == {"cuspidal:1,2,2,4": 1}


def test_g_substitution_identity():
    for n in range(2, 6):
        for k in range(n + 1):
            for r in range(k + 1):
                for h in range(r, n + 1):
                    if k - r <= n - h:
                        assert family_service.g_substitution_check(r, h, k, n), (r, h, k, n)
