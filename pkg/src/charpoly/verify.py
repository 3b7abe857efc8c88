"""Verification suites: each one recomputes a family of known identities.

A suite returns a :class:`SuiteResult` holding one :class:`Check` per
identity instance; a failed check carries the offending values.  ``size``
overrides the suite's main bound (partition size, or the exponent bound of
the generating-function suite).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .characters import (
    h_product,
    jacobi_trudi_e,
    jacobi_trudi_h,
    phi,
    phi_inverse_gen,
    schur_in_powersums,
    specht_poly,
    tau,
    weyl_poly,
)
from .genfun import verify_all_genfun
from .moments import (
    criterion_hook,
    criterion_two_column,
    criterion_two_row,
    hook_shape,
    invariant_dim,
    invariant_dim_via_vp,
    monotonicity_check,
    p2_closed,
    p3_closed,
    restriction_coeff_at,
    restriction_table,
    stable_moment,
    vector_partitions,
)
from .oracle import oracle_restriction
from .partitions import (
    character,
    conjugate,
    cycle_counts,
    partitions_of,
    partitions_upto,
    sigma_character,
    z_alpha,
)
from .poly import Polynomial, binom_elem, format_polynomial, parse_polynomial, to_binomial_basis
from .reference import MATRIX_INDEX, RESTRICTION_MATRIX, WEYL_TABLE


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), "" if passed else detail))

    def report(self) -> str:
        failed = [c for c in self.checks if not c.passed]
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite}: {len(self.checks) - len(failed)}/{len(self.checks)} checks ({self.seconds:.2f}s)"]
        lines += [f"    {c.name}: {c.detail}" for c in failed[:20]]
        return "\n".join(lines)


def _fmt(p) -> str:
    return ",".join(map(str, p)) if p else "empty"


def suite_table1(size: int | None = None) -> SuiteResult:
    res = SuiteResult("table1")
    for lam, text in WEYL_TABLE.items():
        if size is not None and sum(lam) > size:
            continue
        got = weyl_poly(lam)
        want = parse_polynomial(text)
        res.add(f"S[{_fmt(lam)}]", got == want and format_polynomial(got) == text, f"got {got}, expected {text}")
    return res


def suite_matrix(size: int | None = None) -> SuiteResult:
    size = 5 if size is None else size
    res = SuiteResult("matrix")
    table = restriction_table(size)
    ref = {(r, c): RESTRICTION_MATRIX[i][j] for i, r in enumerate(MATRIX_INDEX) for j, c in enumerate(MATRIX_INDEX)}
    for i, lam in enumerate(table.rows):
        for j, mu in enumerate(table.cols):
            v = table.entries[i][j]
            if (lam, mu) in ref:
                res.add(f"r[{_fmt(lam)}; {_fmt(mu)}]", v == ref[lam, mu], f"got {v}, expected {ref[lam, mu]}")
            if sum(lam) == sum(mu):
                # unitriangular blocks in reverse-lexicographic order
                want = 1 if lam == mu else (0 if j > i else None)
                if want is not None:
                    res.add(f"block r[{_fmt(lam)}; {_fmt(mu)}]", v == want, f"got {v}, expected {want}")
    return res


def direct_class_average(p: Polynomial, n: int) -> Fraction:
    """``(1/n!) sum_beta (n!/z_beta) p(beta)``, evaluated class by class."""
    total = Fraction(0)
    for beta in partitions_of(n):
        total += Fraction(factorial(n), z_alpha(beta)) * p.evaluate(cycle_counts(beta))
    return total / factorial(n)


def suite_moment(size: int | None = None, n_max: int = 8) -> SuiteResult:
    size = 5 if size is None else size
    res = SuiteResult("moment")
    for alpha in partitions_upto(size):
        b = binom_elem(alpha)
        for n in range(n_max + 1):
            closed = Fraction(0) if n < sum(alpha) else Fraction(1, z_alpha(alpha))
            direct = direct_class_average(b, n)
            res.add(f"<binom(X,{_fmt(alpha)})>_{n}", closed == direct, f"closed form {closed}, class average {direct}")
    return res


def suite_oracle(size: int | None = None, n_max: int = 6, mu_max: int = 3) -> SuiteResult:
    size = 4 if size is None else size
    res = SuiteResult("oracle")
    for lam in partitions_upto(size):
        for mu in partitions_upto(mu_max):
            lo = max(sum(mu) + (mu[0] if mu else 0), len(lam), 1)
            for n in range(lo, n_max + 1):
                a = restriction_coeff_at(lam, mu, n)
                b = oracle_restriction(lam, mu, n)
                res.add(f"r[{_fmt(lam)}; {_fmt(mu)}]({n})", a == b, f"moment {a}, brute force {b}")
    return res


def suite_duality(size: int | None = None) -> SuiteResult:
    size = 6 if size is None else size
    res = SuiteResult("duality")
    for lam in partitions_upto(size):
        if not lam:
            continue
        h, e = jacobi_trudi_h(lam), jacobi_trudi_e(lam)
        res.add(f"det H = det E for {_fmt(lam)}", h == e, f"{h} != {e}")
        t = tau(sum(lam), h)
        other = weyl_poly(conjugate(lam))
        res.add(f"tau S[{_fmt(lam)}] = S[{_fmt(conjugate(lam))}]", t == other, f"{t} != {other}")
    return res


def suite_leading(size: int | None = None, h_size: int = 5) -> SuiteResult:
    size = 6 if size is None else size
    res = SuiteResult("leading")
    for d in range(size + 1):
        for lam in partitions_of(d):
            s_coeffs = to_binomial_basis(weyl_poly(lam))
            q_coeffs = to_binomial_basis(specht_poly(lam))
            h_coeffs = to_binomial_basis(h_product(lam)) if d <= h_size else None
            for alpha in partitions_of(d):
                chi = character(lam, alpha)
                s = s_coeffs.get(alpha, 0)
                q = q_coeffs.get(alpha, 0)
                res.add(f"S[{_fmt(lam)}] at {_fmt(alpha)}", s == chi, f"coefficient {s}, character {chi}")
                res.add(f"q[{_fmt(lam)}] at {_fmt(alpha)}", q == chi, f"coefficient {q}, character {chi}")
                if h_coeffs is not None:
                    sig = sigma_character(lam, alpha)
                    h = h_coeffs.get(alpha, 0)
                    res.add(f"H[{_fmt(lam)}] at {_fmt(alpha)}", h == sig, f"coefficient {h}, sigma {sig}")
    return res


def suite_vp(size: int | None = None, closed_max: int = 20, n_max: int = 8) -> SuiteResult:
    size = 6 if size is None else size
    res = SuiteResult("vp")
    for k in range(closed_max + 1):
        for l in range(closed_max + 1):
            a, b = p2_closed(k, l), vector_partitions((k, l), 2)
            res.add(f"p2({k},{l})", a == b, f"closed {a}, enumeration {b}")
            a, b = p3_closed(k, l), vector_partitions((k, l), 3)
            res.add(f"p3({k},{l})", a == b, f"closed {a}, enumeration {b}")
    for lam in partitions_upto(size):
        for n in range(n_max + 1):
            a, b = invariant_dim(lam, n), invariant_dim_via_vp(lam, n)
            res.add(f"dim[{_fmt(lam)}]({n})", a == b, f"moment {a}, vector partitions {b}")
        res.add(f"monotone dim[{_fmt(lam)}]", monotonicity_check(lam, n_max), "decreases somewhere")
    return res


def suite_criteria(size: int | None = None) -> SuiteResult:
    size = 10 if size is None else size
    res = SuiteResult("criteria")
    for d in range(1, size + 1):
        for lam in partitions_of(d):
            if len(lam) <= 2:
                m = stable_moment(weyl_poly(lam))
                res.add(f"two-row {_fmt(lam)}", criterion_two_row(lam) == (m > 0), f"moment {m}")
            if lam[0] <= 2:
                m = stable_moment(weyl_poly(lam))
                want = criterion_two_column(lam)
                res.add(f"two-column {_fmt(lam)}", m == want, f"moment {m}, predicted {want}")
        for b in range(d):
            a = d - 1 - b
            lam = hook_shape(a, b)
            m = stable_moment(weyl_poly(lam))
            res.add(f"hook {_fmt(lam)}", criterion_hook(a, b) == (m > 0), f"moment {m}")
    return res


def suite_phi(size: int | None = None, k_max: int = 8) -> SuiteResult:
    size = 5 if size is None else size
    res = SuiteResult("phi")
    for lam in partitions_upto(size):
        got = phi(schur_in_powersums(lam))
        want = weyl_poly(lam)
        res.add(f"phi(s[{_fmt(lam)}])", got == want, f"{got} != {want}")
    for k in range(1, k_max + 1):
        got = phi(phi_inverse_gen(k))
        res.add(f"phi(phi^-1(X{k}))", got == Polynomial.var(k), f"got {got}")
    return res


def suite_genfun(size: int | None = None) -> SuiteResult:
    res = SuiteResult("genfun")
    for rep in verify_all_genfun(max_exp=6 if size is None else size):
        detail = "; ".join(str(mm) for mm in rep.mismatches[:5])
        params = ", ".join(f"{k}={v}" for k, v in rep.params.items())
        res.add(f"{rep.identity} ({params})", rep.passed, detail or "nothing checked")
    return res


SUITES = {
    "table1": suite_table1,
    "matrix": suite_matrix,
    "moment": suite_moment,
    "oracle": suite_oracle,
    "duality": suite_duality,
    "leading": suite_leading,
    "genfun": suite_genfun,
    "vp": suite_vp,
    "criteria": suite_criteria,
    "phi": suite_phi,
}


def run_suite(name: str, size: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    start = time.perf_counter()
    res = SUITES[name](size)
    res.seconds = time.perf_counter() - start
    return res


def run_suites(names, size: int | None = None) -> list[SuiteResult]:
    if names == "all" or names == ["all"]:
        names = list(SUITES)
    return [run_suite(n, size) for n in names]
