#!/usr/bin/env python3
"""
Tests for the verification suites, run at reduced sizes
"""

import pytest

from config import Config
from valuta.services import verification_service
from valuta.services.verification import VerificationReport, VerificationService


@pytest.fixture
def small_sizes(monkeypatch):
    monkeypatch.setattr(verification_service, "max_n", 4)
    monkeypatch.setattr(verification_service, "family_max_n", 5)
    monkeypatch.setattr(verification_service, "formula_max_n", 5)
    monkeypatch.setattr(verification_service, "samples", 2)


def test_reference_examples_suite():
    report = verification_service.run("paper-examples")
    assert report.passed
    names = [item.name for item in report.items]
    assert "2 T(T24) = T(U24) + T(U12+U12)" in names
    assert "G-rank of M_{4,2}" in names
    assert report.summary()["failed"] == 0
    assert report.summary()["total"] == 7 + 7 + 3 + 1 + 3


@pytest.mark.parametrize("suite", ["enumeration", "formulas", "decomposition"])
def test_suites_pass_at_small_sizes(small_sizes, suite):
    report = verification_service.run(suite)
    failures = [str(item) for item in report.items if item.verdict == "FAIL"]
    assert failures == []
    assert report.passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        verification_service.run("everything")


def test_flagged_items_do_not_fail_the_report():
    report = VerificationReport(["demo"])
    report.compare("agrees", 1, 1)
    report.record("unproved claim", False, 3, 4, flagged=True)
    assert report.passed
    assert report.summary()["flagged"] == 1
    text = report.to_text()
    assert "⚠️ unproved claim" in text
    assert "expected: 3" in text
    report.compare("disagrees", 1, 2)
    assert not report.passed
    assert report.to_json()["items"][-1]["verdict"] == "FAIL"


def test_random_samples_are_reproducible():
    first = verification_service.random_samples(6)
    second = verification_service.random_samples(6)
    assert first == second
    assert sorted({M.n for M in first}) == [7, 8, 9]


def test_formula_checks_cover_nine_elements():
    assert Config.FORMULA_MAX_N == 9
    assert Config.FAMILY_MAX_N == 9
    assert VerificationService().formula_max_n == Config.FORMULA_MAX_N
