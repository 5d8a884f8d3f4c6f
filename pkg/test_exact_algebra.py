#!/usr/bin/env python3
"""
Tests for exact polynomials, fraction-free rank and span membership

sympy serves as the independent oracle.
"""

from fractions import Fraction

import pytest
import sympy

from valuta.errors import DimensionMismatch
from valuta.models import BivarPoly, ExactMatrix, exact_rank, monomial_order, parse_poly, solve_in_span

X, Y = sympy.symbols("x y")


def as_sympy(P: BivarPoly):
    return sum((c * X ** i * Y ** j for (i, j), c in P.terms.items()), sympy.Integer(0))


def test_pretty_printing_and_parsing():
    P = parse_poly("x^2 + y^2 + 2*x + 2*y")
    assert str(P) == "x^2 + y^2 + 2*x + 2*y"
    assert str(parse_poly("x*y - x - y")) == "x*y - x - y"
    assert str(BivarPoly.zero()) == "0"
    assert str(BivarPoly.constant(-3)) == "-3"


def test_arithmetic_matches_sympy():
    P = parse_poly("x^2 + x*y + y^2 + x + y")
    Q = parse_poly("2*x*y - 3*y + 1")
    assert sympy.expand(as_sympy(P * Q) - as_sympy(P) * as_sympy(Q)) == 0
    assert sympy.expand(as_sympy(P - Q) - (as_sympy(P) - as_sympy(Q))) == 0
    assert sympy.expand(as_sympy(P ** 3) - as_sympy(P) ** 3) == 0
    assert 2 * P == P + P
    assert P - P == 0


def test_shift_matches_substitution():
    P = parse_poly("x^2*y + x*y^2 - 4*x + 7")
    for a, b in [(1, 1), (-1, -1), (2, -3)]:
        expected = sympy.expand(as_sympy(P).subs({X: X + a, Y: Y + b}, simultaneous=True))
        assert sympy.expand(as_sympy(P.shift(a, b)) - expected) == 0


def test_evaluate_swap_and_json():
    P = parse_poly("x^2 + 2*x*y + y^3")
    assert P.evaluate(2, 1) == 4 + 4 + 1
    assert P.swap() == parse_poly("y^2 + 2*x*y + x^3")
    assert BivarPoly.from_json(P.to_json()) == P
    assert P.to_json()[0] == [0, 3, 1]


def test_monomial_order_is_graded_lex_descending():
    polys = [parse_poly("x + y"), parse_poly("x*y + 1"), parse_poly("y^2")]
    assert monomial_order(polys) == [(1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]


def test_exact_rank_matches_sympy():
    rows = [
        [1, 2, 3, 4],
        [2, 4, 6, 8],
        [0, 1, 1, 0],
        [1, 3, 4, 4],
        [5, -1, 0, 2],
    ]
    assert exact_rank(rows) == sympy.Matrix(rows).rank()
    assert ExactMatrix(rows).transpose().shape == (4, 5)
    assert ExactMatrix(rows).transpose().rank() == exact_rank(rows)
    assert exact_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
    assert exact_rank([]) == 0


def test_ragged_rows_are_rejected():
    with pytest.raises(DimensionMismatch):
        ExactMatrix([[1, 2], [3]])


def test_solve_in_span_unique_integral():
    generators = [[1, 0, 1], [0, 1, 1]]
    solution = solve_in_span(generators, [2, -3, -1])
    assert solution.is_unique
    assert solution.is_integral
    assert solution.integer_coefficients() == [2, -3]


def test_solve_in_span_fractional_and_outside():
    solution = solve_in_span([[2, 0], [0, 2]], [1, 1])
    assert solution.coefficients == [Fraction(1, 2), Fraction(1, 2)]
    assert not solution.is_integral
    assert solve_in_span([[1, 0, 0], [0, 1, 0]], [0, 0, 1]) is None


def test_solve_in_span_dependent_generators():
    solution = solve_in_span([[1, 1], [2, 2]], [3, 3])
    assert not solution.is_unique
    assert sum(c * g[0] for c, g in zip(solution.coefficients, [[1, 1], [2, 2]])) == 3


def test_solve_in_span_length_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_in_span([[1, 2]], [1, 2, 3])
