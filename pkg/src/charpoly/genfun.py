"""Generating functions for moments, checked coefficient by coefficient.

Each identity is expanded as a truncated :class:`~charpoly.series.Series`
(one factor at a time, skipping factors that lie wholly beyond the
truncation) and every coefficient inside the box is compared with a moment
computed directly.  Auxiliary variables are ``t1..tl`` (for ``H``),
``u1..um`` (for ``E``) and ``v`` (for the size ``n``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .moments import mixed_moment, moment_n
from .partitions import partitions_upto, z_alpha
from .poly import binom_elem
from .series import Series, check_budget

IDENTITIES = ("binomial_moments", "hmomgen", "he", "hlamu", "hlaemu")
DEFAULT_BUDGET = 250_000


@dataclass(frozen=True)
class Mismatch:
    exponents: dict[str, int]
    series_value: Fraction
    moment_value: Fraction

    def __str__(self) -> str:
        mono = "*".join(f"{k}^{e}" for k, e in self.exponents.items() if e) or "1"
        return f"coefficient of {mono}: series {self.series_value}, moment {self.moment_value}"


@dataclass
class GenfunReport:
    identity: str
    params: dict[str, int]
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.mismatches

    def summary(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity} ({params}): {self.checked} coefficients, {len(self.mismatches)} mismatches"
        return "\n".join([line] + [f"    {mm}" for mm in self.mismatches[:10]])


def _names(l: int, m: int, with_v: bool) -> tuple[str, ...]:
    names = tuple(f"t{i}" for i in range(1, l + 1)) + tuple(f"u{j}" for j in range(1, m + 1))
    return names + ("v",) if with_v else names


def _main_product(l: int, m: int, bound: int, with_v: bool) -> Series:
    """prod_R prod_S of the main factors; with ``v`` the (R, S) = (0, 0)
    factor is ``1/(1 - v)``, without it that factor is dropped."""
    names = _names(l, m, with_v)
    s = Series.one(names, bound)
    for r in product(range(bound + 1), repeat=l):
        for sub in product((0, 1), repeat=m):
            exps = r + sub + ((1,) if with_v else ())
            if not any(exps):
                continue
            if sum(sub) % 2:
                s = s.mul_linear(exps, 1, 1)
            else:
                s = s.mul_linear(exps, -1, -1)
    return s


def _he_product(bound: int) -> Series:
    # prod_{k>=0} (1 + t^k u) / prod_{k>=1} (1 - t^k)
    s = Series.one(("t", "u"), bound)
    for k in range(bound + 1):
        s = s.mul_linear((k, 1), 1, 1)
    for k in range(1, bound + 1):
        s = s.mul_linear((k, 0), -1, -1)
    return s


def _compare(report: GenfunReport, names, series: Series, expected) -> None:
    for exps in product(*(range(b + 1) for b in series.bounds)):
        got = series.coeff(exps)
        want = expected(exps)
        report.checked += 1
        if got != want:
            report.mismatches.append(Mismatch(dict(zip(names, exps)), Fraction(got), Fraction(want)))


def verify_genfun(
    identity: str, l: int = 2, m: int = 2, max_exp: int = 6, budget: int = DEFAULT_BUDGET
) -> GenfunReport:
    """Expand one generating-function identity and compare it with moments.

    ``binomial_moments`` checks every ``alpha`` with ``|alpha| <= max_exp``
    against powers of ``v``; ``he`` is the one-``t``, one-``u`` case written
    as a closed product; ``hmomgen`` ignores ``m``.
    """
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    if min(l, m, max_exp) < 0:
        raise ValueError("l, m and max_exp must be nonnegative")
    if identity == "hmomgen":
        m = 0
    if identity in ("he", "binomial_moments"):
        params = {"max_exp": max_exp}
    elif identity == "hmomgen":
        params = {"l": l, "max_exp": max_exp}
    else:
        params = {"l": l, "m": m, "max_exp": max_exp}
    report = GenfunReport(identity, params)

    if identity == "binomial_moments":
        for alpha in partitions_upto(max_exp):
            series = Series.monomial(("v",), {"v": sum(alpha)}, Fraction(1, z_alpha(alpha)), max_exp)
            series = series.mul_linear((1,), -1, -1)
            b = binom_elem(alpha)
            _compare(report, ("v",), series, lambda e, b=b: moment_n(b, e[0]))
        return report

    if identity == "he":
        check_budget(("t", "u"), max_exp, budget)
        series = _he_product(max_exp)
        _compare(report, ("t", "u"), series, lambda e: mixed_moment((e[0],), (e[1],)))
        return report

    with_v = identity in ("hlaemu", "hmomgen")
    names = _names(l, m, with_v)
    check_budget(names, max_exp, budget)
    series = _main_product(l, m, max_exp, with_v)
    if with_v:
        expected = lambda e: mixed_moment(e[:l], e[l : l + m], e[-1])  # noqa: E731
    else:
        expected = lambda e: mixed_moment(e[:l], e[l:])  # noqa: E731
    _compare(report, names, series, expected)
    return report


def verify_all_genfun(max_lm: int = 2, max_exp: int = 6) -> list[GenfunReport]:
    """Every identity for all ``l, m <= max_lm``."""
    # the largest box is checked before anything is expanded
    check_budget(_names(max_lm, max_lm, True), max_exp, DEFAULT_BUDGET)
    reports = [verify_genfun("binomial_moments", max_exp=max_exp), verify_genfun("he", max_exp=max_exp)]
    for l in range(max_lm + 1):
        reports.append(verify_genfun("hmomgen", l=l, max_exp=max_exp))
    for ident in ("hlamu", "hlaemu"):
        for l in range(max_lm + 1):
            for m in range(max_lm + 1):
                reports.append(verify_genfun(ident, l=l, m=m, max_exp=max_exp))
    return reports
