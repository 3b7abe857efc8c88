"""Exact polynomials in the cycle-count variables X1, X2, ...

Variable ``Xi`` carries weight ``i``; the graded degree of a monomial
``X1^a1 X2^a2 ...`` is ``a1 + 2*a2 + 3*a3 + ...``.  Coefficients are
:class:`fractions.Fraction` values kept in lowest terms.

A monomial is stored as a dense exponent tuple ``(a1, a2, ..., ak)`` with the
trailing zeros stripped, so ``()`` is the constant monomial and any index can
appear without declaring a variable bound up front.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Monomial = tuple[int, ...]
Partition = tuple[int, ...]
Scalar = Union[int, Fraction]


def _strip(exps: Iterable[int]) -> Monomial:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def monomial(exps: Mapping[int, int]) -> Monomial:
    """Build a monomial from a sparse ``{variable index: exponent}`` map."""
    if not exps:
        return ()
    if min(exps) < 1:
        raise ValueError(f"variable indices start at 1, got {sorted(exps)}")
    dense = [0] * max(exps)
    for i, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent {e} on X{i}")
        dense[i - 1] = e
    return _strip(dense)


def monomial_exponents(m: Monomial) -> dict[int, int]:
    return {i + 1: e for i, e in enumerate(m) if e}


def monomial_degree(m: Monomial) -> int:
    return sum((i + 1) * e for i, e in enumerate(m))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(x + y for x, y in zip_longest(a, b, fillvalue=0))


def _monomial_sort_key(m: Monomial, width: int) -> tuple:
    # degree-reverse-lexicographic on the ordinary (unweighted) degree,
    # largest first; this is the order the reference tables are printed in
    padded = m + (0,) * (width - len(m))
    return (-sum(m), padded[::-1])


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Polynomial:
    """Sparse polynomial in X1, X2, ... with rational coefficients.

    Instances are immutable and hashable.  Arithmetic with ``int`` and
    ``Fraction`` operands is supported on either side.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    m = _strip(m)
                    c = clean.get(m, 0) + c
                    if c:
                        clean[m] = c
                    else:
                        clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> Polynomial:
        # caller guarantees normalized keys and no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> Polynomial:
        return cls({(): c})

    @classmethod
    def var(cls, i: int) -> Polynomial:
        if i < 1:
            raise ValueError(f"variable index must be >= 1, got {i}")
        return cls._raw({(0,) * (i - 1) + (1,): Fraction(1)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coeff(self, m: Monomial | Mapping[int, int]) -> Fraction:
        if isinstance(m, Mapping):
            m = monomial(m)
        return self._terms.get(_strip(m), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical emission order."""
        width = max((len(m) for m in self._terms), default=0)
        return sorted(self._terms.items(), key=lambda t: _monomial_sort_key(t[0], width))

    # arithmetic

    @staticmethod
    def _coerce(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # queries

    def graded_degree(self) -> int:
        """Largest weighted degree over the terms; undefined for zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no graded degree")
        return max(monomial_degree(m) for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m in self._terms)

    def homogeneous_part(self, d: int) -> Polynomial:
        """Terms of graded degree exactly ``d``."""
        return Polynomial._raw({m: c for m, c in self._terms.items() if monomial_degree(m) == d})

    def evaluate(self, counts: Mapping[int, Scalar]) -> Fraction:
        """Substitute ``Xi = counts[i]`` (missing indices are zero)."""
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    x = counts.get(i + 1, 0)
                    if not x:
                        v = 0
                        break
                    v = v * x**e
            total += v
        return total

    __call__ = evaluate

    def map_coefficients(self, f) -> Polynomial:
        return Polynomial({m: f(m, c) for m, c in self._terms.items()})

    # text and JSON

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        return parse_polynomial(text)

    def to_json(self) -> dict:
        return {
            "basis": "monomial",
            "terms": [
                {"exps": {str(i): e for i, e in monomial_exponents(m).items()}, "coeff": str(c)}
                for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> Polynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        basis = obj.get("basis", "monomial")
        if basis == "binomial":
            return from_binomial_basis(binomial_from_json(obj))
        if basis != "monomial":
            raise ValueError(f"unknown basis {basis!r}")
        terms: dict[Monomial, Fraction] = {}
        for t in obj["terms"]:
            m = monomial({int(i): int(e) for i, e in t["exps"].items()})
            terms[m] = terms.get(m, 0) + Fraction(t["coeff"])
        return cls(terms)


def _format_monomial(m: Monomial) -> str:
    return "*".join(f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in monomial_exponents(m).items())


def format_polynomial(p: Polynomial) -> str:
    """Render as e.g. ``1/3*X1^3 - 1/3*X1 - X3``."""
    if not p:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = _format_monomial(m)
        else:
            body = f"{a}*{_format_monomial(m)}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_FACTOR = re.compile(r"^(?:X(\d+)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`; also accepts ``X1 X2`` juxtaposition."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms: dict[Monomial, Fraction] = {}
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        piece = piece.lstrip("+-")
        coeff = Fraction(sign)
        exps: dict[int, int] = {}
        for f in filter(None, piece.split("*")):
            mt = _FACTOR.match(f)
            if not mt:
                raise ValueError(f"cannot parse factor {f!r} in {text!r}")
            if mt.group(3):
                coeff *= Fraction(mt.group(3))
            else:
                i = int(mt.group(1))
                exps[i] = exps.get(i, 0) + int(mt.group(2) or 1)
        m = monomial(exps)
        terms[m] = terms.get(m, 0) + coeff
    return Polynomial(terms)


X = Polynomial.var
ONE = Polynomial.const(1)
ZERO = Polynomial()


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def graded_degree(p: Polynomial) -> int:
    return p.graded_degree()


def eval_at(p: Polynomial, counts: Mapping[int, Scalar]) -> Fraction:
    return p.evaluate(counts)


# univariate building blocks


@lru_cache(maxsize=None)
def stirling2(m: int, j: int) -> int:
    """Stirling numbers of the second kind, S(m, j)."""
    if m == j:
        return 1
    if j == 0 or j > m:
        return 0
    return j * stirling2(m - 1, j) + stirling2(m - 1, j - 1)


@lru_cache(maxsize=None)
def _falling_coeffs(a: int) -> tuple[Fraction, ...]:
    # coefficients of binom(x, a) = x(x-1)...(x-a+1)/a! in powers of x
    c = [Fraction(1)]
    for k in range(a):
        nxt = [Fraction(0)] * (len(c) + 1)
        for p, v in enumerate(c):
            nxt[p + 1] += v
            nxt[p] -= k * v
        c = nxt
    f = factorial(a)
    return tuple(v / f for v in c)


@lru_cache(maxsize=None)
def _rising_coeffs(a: int) -> tuple[Fraction, ...]:
    # coefficients of binom(x+a-1, a) = x(x+1)...(x+a-1)/a!
    c = [Fraction(1)]
    for k in range(a):
        nxt = [Fraction(0)] * (len(c) + 1)
        for p, v in enumerate(c):
            nxt[p + 1] += v
            nxt[p] += k * v
        c = nxt
    f = factorial(a)
    return tuple(v / f for v in c)


def _univariate(i: int, coeffs: tuple[Fraction, ...]) -> Polynomial:
    lead = (0,) * (i - 1)
    return Polynomial._raw({(lead + (p,) if p else ()): c for p, c in enumerate(coeffs) if c})


@lru_cache(maxsize=None)
def binom_var(i: int, a: int) -> Polynomial:
    """``binom(Xi, a)`` as a polynomial."""
    return _univariate(i, _falling_coeffs(a))


@lru_cache(maxsize=None)
def multichoose_var(i: int, a: int) -> Polynomial:
    """``binom(Xi + a - 1, a)``, the number of size-``a`` multisets on ``Xi`` letters."""
    return _univariate(i, _rising_coeffs(a))


# binomial basis


def _exponential(alpha: Iterable[int]) -> dict[int, int]:
    mult: dict[int, int] = {}
    for part in alpha:
        mult[part] = mult.get(part, 0) + 1
    return mult


def _partition_from_exponents(a: Iterable[int]) -> Partition:
    parts: list[int] = []
    for i, e in enumerate(a):
        parts.extend([i + 1] * e)
    return tuple(sorted(parts, reverse=True))


def _exponents_from_partition(alpha: Iterable[int]) -> Monomial:
    return monomial(_exponential(alpha))


@lru_cache(maxsize=None)
def binom_elem(alpha: Partition) -> Polynomial:
    """The binomial basis element ``prod_i binom(Xi, a_i)`` for ``alpha = 1^a1 2^a2 ...``."""
    result = ONE
    for i, a in sorted(_exponential(alpha).items()):
        result = result * binom_var(i, a)
    return result


@lru_cache(maxsize=None)
def _power_in_binomials(m: int) -> tuple[tuple[int, int], ...]:
    # x^m = sum_j S(m, j) j! binom(x, j)
    return tuple((j, stirling2(m, j) * factorial(j)) for j in range(m + 1) if stirling2(m, j))


def to_binomial_basis(p: Polynomial) -> dict[Partition, Fraction]:
    """Coefficients of ``p`` in the basis ``binom(X, alpha)``, keyed by partition."""
    out: dict[Partition, Fraction] = {}
    for m, c in p.terms.items():
        partial: dict[Monomial, Fraction] = {(): c}
        for i, e in enumerate(m):
            if not e:
                continue
            nxt: dict[Monomial, Fraction] = {}
            for key, v in partial.items():
                for j, w in _power_in_binomials(e):
                    k2 = key + (0,) * (i - len(key)) + (j,) if j else key
                    nxt[k2] = nxt.get(k2, 0) + v * w
            partial = nxt
        for key, v in partial.items():
            alpha = _partition_from_exponents(key)
            out[alpha] = out.get(alpha, 0) + v
    return {a: c for a, c in out.items() if c}


def from_binomial_basis(e: Mapping[Partition, Scalar]) -> Polynomial:
    result = ZERO
    for alpha, c in e.items():
        if c:
            result = result + binom_elem(tuple(alpha)) * _as_fraction(c)
    return result


def _partition_sort_key(alpha: Partition):
    # by size, then reverse lexicographic within a size
    return (sum(alpha), tuple(-x for x in alpha))


def binomial_to_json(e: Mapping[Partition, Scalar]) -> dict:
    return {
        "basis": "binomial",
        "terms": [
            {"partition": list(a), "coeff": str(_as_fraction(c))}
            for a, c in sorted(e.items(), key=lambda t: _partition_sort_key(t[0]))
            if c
        ],
    }


def binomial_from_json(obj: Mapping) -> dict[Partition, Fraction]:
    if obj.get("basis") != "binomial":
        raise ValueError("expected a binomial-basis object")
    out: dict[Partition, Fraction] = {}
    for t in obj["terms"]:
        a = tuple(sorted((int(x) for x in t["partition"]), reverse=True))
        out[a] = out.get(a, 0) + Fraction(t["coeff"])
    return {a: c for a, c in out.items() if c}


def format_binomial(e: Mapping[Partition, Scalar]) -> str:
    """Text form such as ``2*B[1,1] + B[1]``; ``B[]`` is the constant 1."""
    items = [(a, _as_fraction(c)) for a, c in e.items() if c]
    if not items:
        return "0"
    # largest size first, reverse-lexicographic within a size
    items.sort(key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
    out = []
    for k, (a, c) in enumerate(items):
        name = "B[" + ",".join(map(str, a)) + "]"
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if k == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)
