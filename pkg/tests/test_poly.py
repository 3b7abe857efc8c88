from __future__ import annotations

import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charpoly.poly import (
    ONE,
    ZERO,
    Polynomial,
    X,
    binom_elem,
    binom_var,
    binomial_from_json,
    binomial_to_json,
    format_binomial,
    format_polynomial,
    from_binomial_basis,
    multichoose_var,
    parse_polynomial,
    stirling2,
    to_binomial_basis,
)

from conftest import cycle_count_maps, polynomials


def test_constants_and_variables():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(X(3)) == "X3"
    with pytest.raises(ValueError):
        X(0)


def test_canonical_text_order():
    p = X(3) * -1 + X(1) ** 3 * Fraction(1, 3) - X(1) / 3
    assert format_polynomial(p) == "1/3*X1^3 - 1/3*X1 - X3"
    q = X(1) * X(2) + X(2) ** 2 + X(1) ** 2 * X(2) + 2
    assert str(q) == "X1^2*X2 + X1*X2 + X2^2 + 2"


def test_parse_examples():
    p = parse_polynomial("1/2*X1^2 + 1/2*X1 + X2")
    assert p.coeff({1: 2}) == Fraction(1, 2)
    assert p.coeff({2: 1}) == 1
    assert parse_polynomial("-X1 + 3") == 3 - X(1)
    assert parse_polynomial("0") == ZERO
    with pytest.raises(ValueError):
        parse_polynomial("X1 +")


def test_graded_and_total_degree():
    p = X(1) ** 2 + X(3)
    assert p.graded_degree() == 3
    assert p.total_degree() == 2
    assert ONE.graded_degree() == 0
    with pytest.raises(ValueError):
        ZERO.graded_degree()


def test_evaluation_at_cycle_counts():
    p = parse_polynomial("1/3*X1^3 - 1/3*X1 - X3")
    # trace on the three classes of S_3: identity, transposition, 3-cycle
    assert p.evaluate({1: 3}) == 8
    assert p.evaluate({1: 1, 2: 1}) == 0
    assert p.evaluate({3: 1}) == -1
    assert p({1: 3}) == 8


def test_binomial_variables():
    assert binom_var(1, 2) == X(1) * (X(1) - 1) / 2
    assert multichoose_var(2, 2) == X(2) * (X(2) + 1) / 2
    for x in range(6):
        assert binom_var(1, 3).evaluate({1: x}) == comb(x, 3)
        assert multichoose_var(1, 3).evaluate({1: x}) == comb(x + 2, 3)


def test_stirling_numbers():
    assert [stirling2(4, j) for j in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1


def test_binomial_expansion_examples():
    # X1^2 = 2 binom(X1, 2) + binom(X1, 1)
    assert to_binomial_basis(X(1) ** 2) == {(1, 1): 2, (1,): 1}
    assert to_binomial_basis(X(2)) == {(2,): 1}
    assert to_binomial_basis(ONE) == {(): 1}
    assert binom_elem((2, 1)) == X(1) * X(2)


def test_json_round_trip():
    p = parse_polynomial("1/2*X1^2 - X1*X3 + 7")
    obj = p.to_json()
    assert obj["basis"] == "monomial"
    assert obj["terms"][0] == {"exps": {"1": 2}, "coeff": "1/2"}
    assert Polynomial.from_json(json.loads(json.dumps(obj))) == p
    b = binomial_to_json(to_binomial_basis(p))
    assert b["basis"] == "binomial"
    assert Polynomial.from_json(b) == p
    assert binomial_from_json({"basis": "binomial", "terms": [{"partition": [1, 1], "coeff": "2"}]}) == {(1, 1): 2}


def test_format_binomial():
    assert format_binomial({(1,): 1, (1, 1): 2}) == "2*B[1,1] + B[1]"
    assert format_binomial({}) == "0"
    assert format_binomial({(3,): -1, (1, 1, 1): 2}) == "-B[3] + 2*B[1,1,1]"


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polynomials(), polynomials(), cycle_count_maps())
def test_evaluation_is_a_ring_map(a, b, counts):
    assert (a * b).evaluate(counts) == a.evaluate(counts) * b.evaluate(counts)
    assert (a + b).evaluate(counts) == a.evaluate(counts) + b.evaluate(counts)


@given(polynomials())
def test_text_round_trip(p):
    assert parse_polynomial(format_polynomial(p)) == p


@given(polynomials())
def test_binomial_basis_round_trip(p):
    assert from_binomial_basis(to_binomial_basis(p)) == p


@settings(max_examples=50)
@given(polynomials(max_exp=2), cycle_count_maps())
def test_binomial_basis_evaluates_the_same(p, counts):
    total = Fraction(0)
    for alpha, c in to_binomial_basis(p).items():
        total += c * binom_elem(alpha).evaluate(counts)
    assert total == p.evaluate(counts)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3))
def test_integer_valued_products_have_integer_binomial_coefficients(exps):
    p = ONE
    for i, e in enumerate(exps, start=1):
        p = p * multichoose_var(i, e)
    assert all(c.denominator == 1 for c in to_binomial_basis(p).values())
