from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from charpoly.poly import Polynomial

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polynomials(draw, max_var: int = 3, max_exp: int = 3, max_terms: int = 5, max_graded: int | None = None):
    """Random sparse polynomials in X1..X{max_var}."""
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        m = tuple(draw(st.integers(0, max_exp)) for _ in range(max_var))
        if max_graded is not None and sum((i + 1) * e for i, e in enumerate(m)) > max_graded:
            continue
        terms[m] = draw(small_fractions)
    return Polynomial(terms)


def cycle_count_maps(max_var: int = 3, max_count: int = 6):
    return st.dictionaries(st.integers(1, max_var), st.integers(0, max_count), max_size=max_var)


ONE_HALF = Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
