"""Truncated multivariate power series in auxiliary variables (t1, u1, v, ...).

Coefficients are either rationals or :class:`~charpoly.poly.Polynomial`
values; anything supporting ``+``, ``*`` and truthiness-as-nonzero works.
Every stored exponent vector respects the per-variable bounds and the
optional total-degree bound, and products drop whatever falls outside.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import FeasibilityError
from .poly import Polynomial, binom_var, multichoose_var

DEFAULT_BOUND = 8


class Series:
    __slots__ = ("names", "bounds", "total", "_coeffs")

    def __init__(
        self,
        names: Sequence[str],
        coeffs: Mapping[tuple[int, ...], object] | None = None,
        bounds: Sequence[int] | Mapping[str, int] | int | None = None,
        total: int | None = None,
    ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"repeated variable names in {self.names}")
        if bounds is None:
            bounds = DEFAULT_BOUND
        if isinstance(bounds, int):
            bounds = (bounds,) * len(self.names)
        elif isinstance(bounds, Mapping):
            bounds = tuple(bounds.get(n, DEFAULT_BOUND) for n in self.names)
        else:
            bounds = tuple(bounds)
        if len(bounds) != len(self.names) or min(bounds, default=0) < 0:
            raise ValueError(f"bad truncation bounds {bounds} for {self.names}")
        self.bounds: tuple[int, ...] = bounds
        self.total = total
        self._coeffs: dict[tuple[int, ...], object] = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != len(self.names):
                raise ValueError(f"exponent {e} does not match variables {self.names}")
            if c and self.fits(e):
                prev = self._coeffs.get(e)
                c = c if prev is None else prev + c
                if c:
                    self._coeffs[e] = c
                else:
                    self._coeffs.pop(e, None)

    def fits(self, e: tuple[int, ...]) -> bool:
        if any(x < 0 or x > b for x, b in zip(e, self.bounds)):
            return False
        return self.total is None or sum(e) <= self.total

    def slot_count(self) -> int:
        n = 1
        for b in self.bounds:
            n *= b + 1
        return n

    def _empty_like(self, other: Series | None = None) -> Series:
        s = Series.__new__(Series)
        s.names = self.names
        if other is None:
            s.bounds, s.total = self.bounds, self.total
        else:
            if other.names != self.names:
                raise ValueError(f"variables differ: {self.names} vs {other.names}")
            s.bounds = tuple(min(a, b) for a, b in zip(self.bounds, other.bounds))
            if self.total is None:
                s.total = other.total
            elif other.total is None:
                s.total = self.total
            else:
                s.total = min(self.total, other.total)
        s._coeffs = {}
        return s

    # constructors

    @classmethod
    def one(cls, names, bounds=None, total=None) -> Series:
        return cls(names, {(0,) * len(tuple(names)): Fraction(1)}, bounds, total)

    @classmethod
    def monomial(cls, names, exps: Mapping[str, int], coeff=Fraction(1), bounds=None, total=None) -> Series:
        names = tuple(names)
        unknown = set(exps) - set(names)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        e = tuple(exps.get(n, 0) for n in names)
        return cls(names, {e: coeff}, bounds, total)

    # access

    def items(self):
        return self._coeffs.items()

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coeff(self, exps: Mapping[str, int] | Sequence[int]):
        if isinstance(exps, Mapping):
            exps = tuple(exps.get(n, 0) for n in self.names)
        exps = tuple(exps)
        if not self.fits(exps):
            raise ValueError(f"exponent {exps} lies beyond the truncation")
        return self._coeffs.get(exps, Fraction(0))

    def constant_term(self):
        return self._coeffs.get((0,) * len(self.names), Fraction(0))

    def map(self, f) -> Series:
        s = self._empty_like()
        for e, c in self._coeffs.items():
            c = f(c)
            if c:
                s._coeffs[e] = c
        return s

    # arithmetic

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        s = self._empty_like(other)
        for src in (self, other):
            for e, c in src._coeffs.items():
                if s.fits(e):
                    prev = s._coeffs.get(e)
                    v = c if prev is None else prev + c
                    if v:
                        s._coeffs[e] = v
                    else:
                        s._coeffs.pop(e, None)
        return s

    def __neg__(self) -> Series:
        return self.map(lambda c: -c)

    def __sub__(self, other: Series) -> Series:
        return self + (-other)

    def __mul__(self, other) -> Series:
        if not isinstance(other, Series):
            return self.map(lambda c: c * other)
        s = self._empty_like(other)
        a, b = self._coeffs, other._coeffs
        if len(a) > len(b):
            a, b = b, a
        out = s._coeffs
        bounds, total = s.bounds, s.total
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(x > bd for x, bd in zip(e, bounds)):
                    continue
                if total is not None and sum(e) > total:
                    continue
                prev = out.get(e)
                v = ca * cb if prev is None else prev + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return s

    __rmul__ = __mul__

    def mul_linear(self, exps: Sequence[int], c, power: int = 1) -> Series:
        """``self * (1 + c*t^exps)^power`` for ``power`` in ``{1, -1}``.

        Same result as multiplying by the expanded factor, but each pass only
        shifts the current support, which keeps long products cheap.
        """
        m = tuple(exps)
        if len(m) != len(self.names) or not any(m) or min(m) < 0:
            raise ValueError(f"bad factor exponent {m}")
        if power not in (1, -1):
            raise ValueError("power must be 1 or -1")
        if power == -1:
            # (1 + c m)^(-1) = sum_k (-c m)^k
            c = -c
        out = dict(self._coeffs)
        cur = self._coeffs
        while cur:
            nxt = {}
            for e, v in cur.items():
                f = tuple(x + y for x, y in zip(e, m))
                if self.fits(f):
                    nxt[f] = v * c
            for f, v in nxt.items():
                prev = out.get(f)
                w = v if prev is None else prev + v
                if w:
                    out[f] = w
                else:
                    out.pop(f, None)
            if power == 1:
                break
            cur = nxt
        s = self._empty_like()
        s._coeffs = out
        return s

    def inverse(self) -> Series:
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.constant_term()
        if isinstance(c0, Polynomial):
            if not c0 or c0.total_degree() != 0:
                raise ValueError("series constant term is not a unit")
            c0 = c0.coeff(())
        if not c0:
            raise ValueError("series constant term is zero; not invertible")
        inv0 = 1 / Fraction(c0)
        zero = (0,) * len(self.names)
        # self = c0 * (1 - x) with x free of constant term
        x = self._empty_like()
        for e, c in self._coeffs.items():
            if e != zero:
                x._coeffs[e] = -c * inv0
        # terminates: each power of x gains total degree and all bounds are finite
        result = Series.one(self.names, self.bounds, self.total)
        power = Series.one(self.names, self.bounds, self.total)
        while True:
            power = power * x
            if not power:
                break
            result = result + power
        return result.map(lambda c: c * inv0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.names == other.names and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return f"Series({self.names}, {len(self._coeffs)} terms, bounds={self.bounds}, total={self.total})"


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_geom_inv(a: Series) -> Series:
    return a.inverse()


def series_coeff(a: Series, exps):
    return a.coeff(exps)


def check_budget(names: Iterable[str], bounds, limit: int) -> None:
    """Raise :class:`FeasibilityError` when a dense truncation box exceeds ``limit`` slots."""
    probe = Series(tuple(names), bounds=bounds)
    if probe.slot_count() > limit:
        raise FeasibilityError(
            f"truncation box of {probe.slot_count()} coefficients exceeds the budget of {limit}"
        )


def expand_power_neg(i: int, var: str, names: Sequence[str], bounds=None, total=None) -> Series:
    """``(1 - var^i)^(-Xi) = sum_j binom(Xi + j - 1, j) var^(i j)``."""
    names = tuple(names)
    k = names.index(var)
    s = Series(names, bounds=bounds, total=total)
    j = 0
    while True:
        e = [0] * len(names)
        e[k] = i * j
        e = tuple(e)
        if not s.fits(e):
            break
        s._coeffs[e] = multichoose_var(i, j)
        j += 1
    return s


def expand_power_pos(i: int, var: str, names: Sequence[str], bounds=None, total=None, sign: int = 1) -> Series:
    """``(1 + sign*var^i)^Xi = sum_j sign^j binom(Xi, j) var^(i j)``.

    The alternating-power generating function ``sum_d E_d t^d`` is the product
    over ``i`` with ``sign = (-1)^(i+1)``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    names = tuple(names)
    k = names.index(var)
    s = Series(names, bounds=bounds, total=total)
    j = 0
    while True:
        e = [0] * len(names)
        e[k] = i * j
        e = tuple(e)
        if not s.fits(e):
            break
        c = binom_var(i, j)
        s._coeffs[e] = -c if sign == -1 and j % 2 else c
        j += 1
    return s
