from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charpoly.characters import e_poly, h_poly
from charpoly.errors import FeasibilityError
from charpoly.poly import ONE
from charpoly.series import Series, check_budget, expand_power_neg, expand_power_pos


def geometric(names, exps, c, bound):
    """``1 / (1 - c t^exps)`` built from explicit powers."""
    s = Series(names, {(0,) * len(names): Fraction(1)}, bound)
    k = 1
    while True:
        e = tuple(k * x for x in exps)
        if not s.fits(e):
            return s
        s = s + Series(names, {e: Fraction(c) ** k}, bound)
        k += 1


def test_truncation_drops_high_terms():
    s = Series(("t",), {(0,): 1, (3,): 2, (9,): 5}, 4)
    assert len(s) == 2
    with pytest.raises(ValueError):
        s.coeff((5,))


def test_inverse_of_one_minus_t():
    s = Series(("t",), {(0,): 1, (1,): -1}, 6).inverse()
    assert [s.coeff((k,)) for k in range(7)] == [1] * 7


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        Series(("t",), {(1,): 1}, 3).inverse()


def test_total_degree_bound():
    s = Series(("t", "u"), {(0, 0): 1, (1, 0): 1, (0, 1): 1}, 5, total=2)
    sq = s * s
    assert sq.coeff((1, 1)) == 2
    assert all(sum(e) <= 2 for e, _ in sq.items())


@given(
    st.lists(st.integers(0, 3), min_size=2, max_size=2).filter(any),
    st.integers(-2, 2).filter(bool),
    st.sampled_from([1, -1]),
)
def test_mul_linear_matches_expanded_factor(exps, c, power):
    names = ("t", "u")
    base = Series(names, {(0, 0): 1, (1, 0): 2, (0, 2): -1, (1, 1): Fraction(1, 3)}, 5)
    if power == 1:
        factor = Series(names, {(0, 0): 1, tuple(exps): c}, 5)
    else:
        factor = geometric(names, exps, -c, 5)
    assert base.mul_linear(exps, c, power) == base * factor


def test_power_expansions_give_h_and_e():
    # prod_i (1 - t^i)^(-Xi) = sum_d H_d t^d and prod_i (1 + (-1)^(i+1) t^i)^Xi = sum_d E_d t^d
    names, bound = ("t",), 5
    h = Series.one(names, bound)
    e = Series.one(names, bound)
    for i in range(1, bound + 1):
        h = h * expand_power_neg(i, "t", names, bound)
        e = e * expand_power_pos(i, "t", names, bound, sign=(-1) ** (i + 1))
    for d in range(bound + 1):
        assert h.coeff((d,)) == h_poly(d)
        assert e.coeff((d,)) == e_poly(d)


def test_plain_power_expansion():
    s = expand_power_pos(1, "t", ("t",), 3)
    # (1 + t)^X1 evaluated at X1 = 3 is 1 + 3t + 3t^2 + t^3
    assert [s.coeff((k,)).evaluate({1: 3}) for k in range(4)] == [1, 3, 3, 1]
    assert s.constant_term() == ONE


def test_budget():
    check_budget(("a", "b"), 10, 121)
    with pytest.raises(FeasibilityError):
        check_budget(("a", "b", "c"), 10, 1000)
