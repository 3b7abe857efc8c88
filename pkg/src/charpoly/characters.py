"""Character polynomials of representation families of the symmetric groups.

``H_d`` and ``E_d`` are the character polynomials of ``Sym^d(K^n)`` and
``wedge^d(K^n)``; ``S_lam`` that of the Weyl module ``W_lam(K^n)`` and
``q_mu`` that of the Specht modules ``V_{mu[n]}`` (valid once the padded
shape exists).  Evaluating any of them at the cycle counts of ``w`` gives the
trace of ``w``.

Symmetric functions are carried in the power-sum basis (:class:`SymFunc`) and
mapped into the polynomial ring by :func:`phi`, ``p_k -> sum_{d | k} d X_d``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .partitions import (
    Partition,
    as_partition,
    character_table,
    conjugate,
    partitions_of,
    to_exponential,
    vertical_strip_subpartitions,
    z_alpha,
)
from .poly import (
    ONE,
    ZERO,
    Polynomial,
    binom_elem,
    binom_var,
    eval_at,
    monomial_exponents,
    multichoose_var,
)
from .series import Series, expand_power_neg

CycleCounts = Mapping[int, int]

__all__ = [
    "CycleCounts",
    "SymFunc",
    "e_poly",
    "e_product",
    "eval_at",
    "h_poly",
    "h_product",
    "phi",
    "phi_inverse",
    "phi_inverse_gen",
    "schur_in_powersums",
    "specht_poly",
    "tau",
    "weyl_poly",
    "weyl_poly_via_genfun",
]


@lru_cache(maxsize=None)
def h_poly(d: int) -> Polynomial:
    """``H_d = sum over alpha |- d of prod_i binom(Xi + a_i - 1, a_i)``; zero for d < 0."""
    if d < 0:
        return ZERO
    total = ZERO
    for alpha in partitions_of(d):
        term = ONE
        for i, a in to_exponential(alpha).items():
            term = term * multichoose_var(i, a)
        total = total + term
    return total


@lru_cache(maxsize=None)
def e_poly(d: int) -> Polynomial:
    """``E_d = sum over alpha |- d of (-1)^(a_2 + a_4 + ...) prod_i binom(Xi, a_i)``."""
    if d < 0:
        return ZERO
    total = ZERO
    for alpha in partitions_of(d):
        mult = to_exponential(alpha)
        term = ONE
        for i, a in mult.items():
            term = term * binom_var(i, a)
        if sum(a for i, a in mult.items() if i % 2 == 0) % 2:
            term = -term
        total = total + term
    return total


def h_product(parts: Sequence[int]) -> Polynomial:
    """``H_{l1} H_{l2} ...`` for any integer vector (negative entries give zero)."""
    result = ONE
    for d in parts:
        result = result * h_poly(d)
    return result


def e_product(parts: Sequence[int]) -> Polynomial:
    result = ONE
    for d in parts:
        result = result * e_poly(d)
    return result


def _determinant(entry, n: int) -> Polynomial:
    # cofactor expansion along rows, memoised on the set of used columns
    memo: dict[tuple[int, int], Polynomial] = {}

    def minor(row: int, used: int) -> Polynomial:
        if row == n:
            return ONE
        key = (row, used)
        if key in memo:
            return memo[key]
        total = ZERO
        sign = 1
        for j in range(n):
            if used >> j & 1:
                continue
            a = entry(row, j)
            if a:
                term = a * minor(row + 1, used | (1 << j))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


def jacobi_trudi_h(lam: Sequence[int]) -> Polynomial:
    """``det(H_{lam_i + j - i})``."""
    lam = tuple(lam)
    n = len(lam)
    return _determinant(lambda i, j: h_poly(lam[i] + j - i), n)


def jacobi_trudi_e(lam: Sequence[int]) -> Polynomial:
    """``det(E_{lam'_i + j - i})`` with lam' the conjugate."""
    conj = conjugate(tuple(lam))
    n = len(conj)
    return _determinant(lambda i, j: e_poly(conj[i] + j - i), n)


@lru_cache(maxsize=None)
def _weyl(lam: Partition) -> Polynomial:
    # the smaller of the two determinants
    if len(lam) <= (lam[0] if lam else 0):
        return jacobi_trudi_h(lam)
    return jacobi_trudi_e(lam)


def weyl_poly(lam: Sequence[int], method: str = "auto") -> Polynomial:
    """Character polynomial ``S_lam`` of the Weyl module ``W_lam``.

    ``method`` picks the determinant: ``"h"`` (complete), ``"e"``
    (elementary, via the conjugate) or ``"auto"`` (smaller matrix).
    """
    lam = as_partition(lam)
    if method == "auto":
        return _weyl(lam)
    if method == "h":
        return jacobi_trudi_h(lam)
    if method == "e":
        return jacobi_trudi_e(lam)
    raise ValueError(f"unknown method {method!r}")


GENFUN_MAX_LENGTH = 4


def weyl_poly_via_genfun(lam: Sequence[int]) -> Polynomial:
    """``S_lam`` read off the generating function
    ``prod_{i<j} (1 - t_j/t_i) prod_r prod_i (1 - t_r^i)^(-Xi)``.

    Multiplying by ``prod_i t_i^(l-i)`` turns the first product into
    ``prod_{i<j} (t_i - t_j)``; the coefficient is then taken at
    ``t^(lam + (l-1, ..., 1, 0))``.
    """
    lam = as_partition(lam)
    l = len(lam)
    if l > GENFUN_MAX_LENGTH:
        raise ValueError(f"length {l} exceeds the generating-function bound {GENFUN_MAX_LENGTH}")
    if l == 0:
        return ONE
    names = tuple(f"t{r + 1}" for r in range(l))
    target = tuple(lam[r] + l - 1 - r for r in range(l))
    bounds = target
    total = sum(target)

    def lift(exps, c=Fraction(1)):
        return Series(names, {tuple(exps): c}, bounds, total)

    acc = lift([0] * l)
    for i in range(l):
        for j in range(i + 1, l):
            ei = [0] * l
            ei[i] = 1
            ej = [0] * l
            ej[j] = 1
            acc = acc * (lift(ei) + lift(ej, Fraction(-1)))
    for r, name in enumerate(names):
        factor = lift([0] * l)
        for i in range(1, bounds[r] + 1):
            factor = factor * expand_power_neg(i, name, names, bounds, total)
        acc = acc * factor
    c = acc.coeff(target)
    return c if isinstance(c, Polynomial) else Polynomial.const(c)


def specht_poly(mu: Sequence[int]) -> Polynomial:
    """Character polynomial ``q_mu`` of the Specht family ``V_{mu[n]}``:
    alternating sum over vertical strips ``mu/nu`` of
    ``sum_{alpha |- |nu|} chi_nu(alpha) binom(X, alpha)``.
    """
    return _specht(as_partition(mu))


@lru_cache(maxsize=None)
def _specht(mu: Partition) -> Polynomial:
    total = ZERO
    for nu in vertical_strip_subpartitions(mu):
        d = sum(nu)
        table = character_table(d)
        inner = ZERO
        for alpha in partitions_of(d):
            chi = table[nu, alpha]
            if chi:
                inner = inner + binom_elem(alpha) * chi
        total = total - inner if (sum(mu) - d) % 2 else total + inner
    return total


def tau(d: int, p: Polynomial) -> Polynomial:
    """The involution ``X^m -> (-1)^(d - total exponent of m) X^m``."""
    return Polynomial({m: (-c if (d - sum(m)) % 2 else c) for m, c in p.terms.items()})


# symmetric functions in the power-sum basis


class SymFunc:
    """Symmetric function as a polynomial in power sums ``p1, p2, ...``.

    Stored as a :class:`Polynomial` whose variable ``Xk`` stands for ``p_k``;
    the weight of ``Xk`` is ``k``, which is the usual degree of ``p_k``.
    """

    __slots__ = ("poly",)

    def __init__(self, poly: Polynomial | None = None):
        self.poly = poly if poly is not None else ZERO

    @classmethod
    def p(cls, k: int) -> SymFunc:
        return cls(Polynomial.var(k))

    @classmethod
    def from_powersums(cls, coeffs: Mapping[Sequence[int], object]) -> SymFunc:
        """From ``{alpha: c}`` meaning ``sum c * p_alpha``."""
        out = ZERO
        for alpha, c in coeffs.items():
            term = ONE
            for k in alpha:
                term = term * Polynomial.var(k)
            out = out + term * Fraction(c)
        return cls(out)

    def powersum_coefficients(self) -> dict[Partition, Fraction]:
        out = {}
        for m, c in self.poly.terms.items():
            alpha = []
            for k, e in sorted(monomial_exponents(m).items(), reverse=True):
                alpha.extend([k] * e)
            out[tuple(alpha)] = c
        return out

    def degree(self) -> int:
        return self.poly.graded_degree()

    def __add__(self, other):
        if isinstance(other, SymFunc):
            return SymFunc(self.poly + other.poly)
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.poly + other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(-self.poly)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return SymFunc(self.poly * other.poly)
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.poly * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly).replace("X", "p")

    def __repr__(self):
        return f"SymFunc({str(self)!r})"


def schur_in_powersums(lam: Sequence[int]) -> SymFunc:
    """``s_lam = sum_alpha chi_lam(alpha) / z_alpha * p_alpha``."""
    lam = as_partition(lam)
    d = sum(lam)
    table = character_table(d)
    return SymFunc.from_powersums(
        {alpha: Fraction(table[lam, alpha], z_alpha(alpha)) for alpha in partitions_of(d) if table[lam, alpha]}
    )


def complete_in_powersums(d: int) -> SymFunc:
    return SymFunc.from_powersums({alpha: Fraction(1, z_alpha(alpha)) for alpha in partitions_of(d)})


def elementary_in_powersums(d: int) -> SymFunc:
    return SymFunc.from_powersums(
        {alpha: Fraction((-1) ** (d - len(alpha)), z_alpha(alpha)) for alpha in partitions_of(d)}
    )


def divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined on positive integers")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def _phi_gen(k: int) -> Polynomial:
    return sum((Polynomial.var(d) * d for d in divisors(k)), ZERO)


def _substitute(p: Polynomial, image) -> Polynomial:
    # ring map determined by Xk -> image(k)
    out = ZERO
    for m, c in p.terms.items():
        term = Polynomial.const(c)
        for k, e in monomial_exponents(m).items():
            term = term * image(k) ** e
        out = out + term
    return out


def phi(f: SymFunc) -> Polynomial:
    """Ring map from symmetric functions with ``p_k -> sum_{d | k} d X_d``."""
    return _substitute(f.poly, _phi_gen)


@lru_cache(maxsize=None)
def phi_inverse_gen(k: int) -> SymFunc:
    """Preimage of ``X_k``: ``(1/k) sum_{d | k} mobius(k/d) p_d``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    poly = ZERO
    for d in divisors(k):
        mu = mobius(k // d)
        if mu:
            poly = poly + Polynomial.var(d) * Fraction(mu, k)
    return SymFunc(poly)


def phi_inverse(p: Polynomial) -> SymFunc:
    return SymFunc(_substitute(p, lambda k: phi_inverse_gen(k).poly))
