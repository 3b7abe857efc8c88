from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charpoly.characters import (
    SymFunc,
    complete_in_powersums,
    e_poly,
    elementary_in_powersums,
    h_poly,
    jacobi_trudi_e,
    jacobi_trudi_h,
    mobius,
    phi,
    phi_inverse,
    phi_inverse_gen,
    schur_in_powersums,
    specht_poly,
    tau,
    weyl_poly,
    weyl_poly_via_genfun,
)
from charpoly.partitions import character, conjugate, cycle_counts, pad, partitions_of, partitions_upto
from charpoly.poly import ONE, ZERO, X, format_polynomial, parse_polynomial
from charpoly.reference import WEYL_TABLE

from conftest import polynomials


@pytest.mark.parametrize("lam", sorted(WEYL_TABLE, key=lambda p: (sum(p), [-x for x in p])))
def test_weyl_table(lam):
    assert format_polynomial(weyl_poly(lam)) == WEYL_TABLE[lam]


def test_small_cases():
    assert weyl_poly(()) == ONE
    assert h_poly(0) == ONE and e_poly(0) == ONE
    assert h_poly(-1) == ZERO and e_poly(-2) == ZERO
    assert h_poly(1) == X(1) and e_poly(1) == X(1)
    assert e_poly(2) == parse_polynomial("1/2*X1^2 - 1/2*X1 - X2")
    assert str(specht_poly(())) == "1"
    assert str(specht_poly((1,))) == "X1 - 1"
    assert str(specht_poly((2,))) == "1/2*X1^2 - 3/2*X1 + X2"
    assert str(specht_poly((1, 1))) == "1/2*X1^2 - 3/2*X1 - X2 + 1"


def test_methods_agree_and_reject_unknown():
    for lam in partitions_upto(6):
        assert weyl_poly(lam, "h") == weyl_poly(lam, "e")
    with pytest.raises(ValueError):
        weyl_poly((2,), "lu")


@pytest.mark.parametrize("lam", [p for p in partitions_upto(5) if len(p) <= 4])
def test_generating_function_route(lam):
    assert weyl_poly_via_genfun(lam) == weyl_poly(lam)


def test_generating_function_length_bound():
    with pytest.raises(ValueError):
        weyl_poly_via_genfun((1, 1, 1, 1, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_specht_polynomials_are_characters(n):
    # q_mu(beta) = chi_{mu[n]}(beta) once the padded shape exists
    for mu in partitions_upto(n):
        if sum(mu) + (mu[0] if mu else 0) > n:
            continue
        q = specht_poly(mu)
        for beta in partitions_of(n):
            assert q.evaluate(cycle_counts(beta)) == character(pad(mu, n), beta)


@pytest.mark.parametrize("lam", [p for p in partitions_upto(6) if p])
def test_duality(lam):
    assert tau(sum(lam), weyl_poly(lam)) == weyl_poly(conjugate(lam))
    assert jacobi_trudi_h(lam) == jacobi_trudi_e(lam)


@given(polynomials(max_graded=6))
def test_tau_is_an_involution(p):
    assert tau(5, tau(5, p)) == p


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    with pytest.raises(ValueError):
        mobius(0)


def test_phi_inverse_generators():
    assert phi_inverse_gen(1) == SymFunc.p(1)
    assert phi_inverse_gen(2) == (SymFunc.p(2) - SymFunc.p(1)) * Fraction(1, 2)
    assert phi_inverse_gen(6) == (SymFunc.p(6) - SymFunc.p(3) - SymFunc.p(2) + SymFunc.p(1)) * Fraction(1, 6)
    for k in range(1, 9):
        assert phi(phi_inverse_gen(k)) == X(k)


@pytest.mark.parametrize("lam", partitions_upto(5))
def test_phi_sends_schur_to_weyl(lam):
    assert phi(schur_in_powersums(lam)) == weyl_poly(lam)


@pytest.mark.parametrize("d", range(7))
def test_phi_on_complete_and_elementary(d):
    assert phi(complete_in_powersums(d)) == h_poly(d)
    assert phi(elementary_in_powersums(d)) == e_poly(d)


@settings(max_examples=40)
@given(polynomials(max_graded=6))
def test_phi_round_trip(p):
    assert phi(phi_inverse(p)) == p


def test_symfunc_text():
    assert str(schur_in_powersums((1, 1))) == "1/2*p1^2 - 1/2*p2"
    assert schur_in_powersums((2,)).degree() == 2
