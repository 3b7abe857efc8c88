"""Moments of character polynomials and the coefficients built from them.

The moment of ``q`` at ``n`` is the average of ``q(w)`` over ``w`` in ``S_n``.
On the binomial basis it is ``1/z_alpha`` once ``n >= |alpha|`` and zero
before, so the moment of any polynomial is constant from its graded degree
on; that constant is the stable moment.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial
from typing import Iterable, Sequence

from .characters import e_poly, h_poly, specht_poly, weyl_poly
from .errors import ConsistencyError
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    cycle_counts,
    partitions_of,
    partitions_upto,
    z_alpha,
)
from .poly import Monomial, Polynomial, _power_in_binomials

__all__ = [
    "CoeffTable",
    "criterion_hook",
    "criterion_two_column",
    "criterion_two_row",
    "class_average",
    "invariant_dim",
    "invariant_dim_via_vp",
    "invariant_dims",
    "kronecker_at",
    "kronecker_stable",
    "mixed_moment",
    "moment_n",
    "monotonicity_check",
    "p2_closed",
    "p3_closed",
    "restriction_coeff_at",
    "restriction_coeff_stable",
    "restriction_table",
    "stable_moment",
    "vector_partitions",
]


@lru_cache(maxsize=None)
def _monomial_moment_profile(m: Monomial) -> tuple[tuple[int, Fraction], ...]:
    # {|alpha|: sum of coefficient/z_alpha} over the binomial expansion of X^m
    partial: dict[tuple[int, ...], int] = {(): 1}
    for i, e in enumerate(m):
        if not e:
            continue
        nxt: dict[tuple[int, ...], int] = {}
        for key, v in partial.items():
            for j, w in _power_in_binomials(e):
                k2 = key + ((i + 1, j),) if j else key
                nxt[k2] = nxt.get(k2, 0) + v * w
        partial = nxt
    by_size: dict[int, Fraction] = {}
    for key, v in partial.items():
        s = sum(i * j for i, j in key)
        z = 1
        for i, j in key:
            z *= i**j * factorial(j)
        by_size[s] = by_size.get(s, 0) + Fraction(v, z)
    return tuple(sorted(by_size.items()))


def moment_n(p: Polynomial, n: int) -> Fraction:
    """Average of ``p`` over ``S_n``, via the binomial-basis expansion."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = Fraction(0)
    for m, c in p.terms.items():
        for s, w in _monomial_moment_profile(m):
            if s > n:
                break
            total += c * w
    return total


def stable_moment(p: Polynomial) -> Fraction:
    """Eventual value of :func:`moment_n`, reached at ``n = graded degree``."""
    if not p:
        return Fraction(0)
    return moment_n(p, p.graded_degree())


def class_average(values, n: int) -> Fraction:
    """``(1/n!) sum_w f(w)`` for a class function given as ``beta -> f(beta)``."""
    total = Fraction(0)
    for beta in partitions_of(n):
        total += Fraction(values(beta), z_alpha(beta))
    return total


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"{what} = {value} is not a nonnegative integer")
    return int(value)


def _valid_n(mu: Partition, n: int) -> None:
    need = sum(mu) + (mu[0] if mu else 0)
    if n < need:
        raise ValueError(f"n = {n} is below {need}, where the Specht character polynomial of {mu} applies")


def restriction_coeff_stable(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Stable multiplicity of ``V_{mu[n]}`` in ``W_lam(K^n)`` restricted to ``S_n``."""
    lam, mu = as_partition(lam), as_partition(mu)
    v = stable_moment(weyl_poly(lam) * specht_poly(mu))
    return _as_count(v, f"r[{lam}, {mu}]")


def restriction_coeff_at(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    lam, mu = as_partition(lam), as_partition(mu)
    _valid_n(mu, n)
    v = moment_n(weyl_poly(lam) * specht_poly(mu), n)
    return _as_count(v, f"r[{lam}, {mu}]({n})")


def _same_size(*parts: Partition) -> None:
    sizes = {sum(p) for p in parts}
    if len(sizes) > 1:
        raise ValueError(f"partitions {parts} must all have the same size")


def kronecker_stable(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Stable multiplicity of ``V_{lam[n]}`` in ``V_{mu[n]} (x) V_{nu[n]}``."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _same_size(lam, mu, nu)
    v = stable_moment(specht_poly(lam) * specht_poly(mu) * specht_poly(nu))
    return _as_count(v, f"g[{lam}, {mu}, {nu}]")


def kronecker_at(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], n: int) -> int:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _same_size(lam, mu, nu)
    for p in (lam, mu, nu):
        _valid_n(p, n)
    v = moment_n(specht_poly(lam) * specht_poly(mu) * specht_poly(nu), n)
    return _as_count(v, f"g[{lam}, {mu}, {nu}]({n})")


def invariant_dim(lam: Sequence[int], n: int) -> int:
    """``dim W_lam(K^n)^{S_n}``."""
    lam = as_partition(lam)
    return _as_count(moment_n(weyl_poly(lam), n), f"dim W{lam}(K^{n})^S{n}")


def invariant_dims(lam: Sequence[int], ns: Iterable[int]) -> list[int]:
    return [invariant_dim(lam, n) for n in ns]


def monotonicity_check(lam: Sequence[int], n_max: int) -> bool:
    """Whether ``invariant_dim(lam, n)`` is weakly increasing for ``1 <= n <= n_max``."""
    dims = invariant_dims(lam, range(1, n_max + 1))
    return all(a <= b for a, b in zip(dims, dims[1:]))


# mixed moments of products of H's and E's, averaged class by class


@lru_cache(maxsize=None)
def _values(kind: str, d: int, n: int) -> tuple[int, ...]:
    poly = h_poly(d) if kind == "h" else e_poly(d)
    return tuple(int(poly.evaluate(cycle_counts(beta))) for beta in partitions_of(n))


@lru_cache(maxsize=None)
def _class_weights(n: int) -> tuple[int, ...]:
    f = factorial(n)
    return tuple(f // z_alpha(beta) for beta in partitions_of(n))


def mixed_moment(lam: Sequence[int], mu: Sequence[int], n: int | None = None) -> Fraction:
    """Moment of ``H_{lam_1} H_{lam_2} ... E_{mu_1} E_{mu_2} ...`` at ``n``.

    ``lam`` and ``mu`` are arbitrary integer vectors.  ``n=None`` gives the
    stable moment.  The product is averaged class by class instead of being
    expanded, since ``H_d`` and ``E_d`` take integer values on every class.
    """
    lam, mu = tuple(lam), tuple(mu)
    if any(x < 0 for x in lam + mu):
        return Fraction(0)
    if n is None:
        n = sum(lam) + sum(mu)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    vectors = [_values("h", d, n) for d in lam if d] + [_values("e", d, n) for d in mu if d]
    total = 0
    for k, w in enumerate(_class_weights(n)):
        v = w
        for vec in vectors:
            v *= vec[k]
            if not v:
                break
        total += v
    return Fraction(total, factorial(n))


# vector partitions


@lru_cache(maxsize=None)
def _vp_table(v: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """``table[k][idx]`` = number of vector partitions of the box point ``idx``
    into exactly ``k`` parts, for every point of the box ``0 <= w <= v``."""
    dims = [x + 1 for x in v]
    strides = []
    s = 1
    for d in reversed(dims):
        strides.append(s)
        s *= d
    strides.reverse()
    size = s
    points = list(product(*(range(d) for d in dims)))  # lexicographic == index order
    table = [[0] * size for _ in range(n + 1)]
    table[0][0] = 1
    # parts in a fixed (lexicographic) order, each used any number of times;
    # layer k depends on layer k-1 already updated for the current part
    for part in points[1:]:
        offset = sum(a * b for a, b in zip(part, strides))
        sources = [
            sum(a * st for a, st in zip(w, strides))
            for w in product(*(range(d - p) for d, p in zip(dims, part)))
        ]
        for k in range(1, n + 1):
            prev, cur = table[k - 1], table[k]
            for idx in sources:
                val = prev[idx]
                if val:
                    cur[idx + offset] += val
    return tuple(tuple(row) for row in table)


def _box_index(w: Sequence[int], v: Sequence[int]) -> int:
    idx = 0
    for x, b in zip(w, v):
        idx = idx * (b + 1) + x
    return idx


def vector_partitions(v: Sequence[int], n: int, mode: str = "exact") -> int:
    """``p_n(v)`` (``mode="exact"``) or ``p_{<=n}(v)`` (``mode="at_most"``).

    A vector with a negative coordinate has no partitions.
    """
    v = tuple(int(x) for x in v)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if mode not in ("exact", "at_most"):
        raise ValueError(f"mode must be 'exact' or 'at_most', got {mode!r}")
    if any(x < 0 for x in v):
        return 0
    # zero coordinates play no role
    v = tuple(x for x in v if x)
    cap = min(n, sum(v))
    box, table = _table_covering(v, cap)
    idx = _box_index(v, box)
    if mode == "exact":
        return table[n][idx] if n <= cap else 0
    return sum(table[k][idx] for k in range(cap + 1))


# a table over a box also counts every vector inside the box, so the largest
# one built so far for each (dimension, number of parts) is kept and reused
_covering: dict[tuple[int, int], tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = {}


def _table_covering(v: tuple[int, ...], cap: int):
    key = (len(v), cap)
    hit = _covering.get(key)
    if hit is not None and all(a <= b for a, b in zip(v, hit[0])):
        return hit
    box = v if hit is None else tuple(max(a, b) for a, b in zip(v, hit[0]))
    if hit is not None and _box_size(box) > 4 * max(_box_size(v), _box_size(hit[0])):
        box = v  # do not let one odd query blow up the shared box
    entry = (box, _vp_table(box, cap))
    if box != v or hit is None:
        _covering[key] = entry
    return entry


def _box_size(v: Sequence[int]) -> int:
    size = 1
    for x in v:
        size *= x + 1
    return size


def _perm_sign(w: Sequence[int]) -> int:
    sign = 1
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                sign = -sign
    return sign


def invariant_dim_via_vp(lam: Sequence[int], n: int) -> int:
    """``sum_w sgn(w) p_{<=n}(lam_1 - 1 + w(1), ..., lam_l - l + w(l))``."""
    lam = as_partition(lam)
    l = len(lam)
    total = 0
    for w in permutations(range(1, l + 1)):
        vec = tuple(lam[i] - (i + 1) + w[i] for i in range(l))
        if min(vec, default=0) < 0:
            continue
        total += _perm_sign(w) * vector_partitions(vec, n, "at_most")
    if total < 0:
        raise ConsistencyError(f"alternating vector-partition sum for {lam}, n={n} is negative")
    return total


def p2_closed(k: int, l: int) -> int:
    """Closed form for the number of 2-part vector partitions of ``(k, l)``."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    if k % 2 == 0 and l % 2 == 0:
        num, den = (k + 1) * (l + 1) - 1, 2
        return num // den
    return (k + 1) * (l + 1) // 2 - 1


def p3_closed(k: int, l: int) -> int:
    """Closed form for 3-part vector partitions of ``(k, l)`` by orbit counting."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    a = comb(k + 2, 2) * comb(l + 2, 2) - 3 * (k + 1) * (l + 1) + 3
    if k % 2 == 0 and l % 2 == 0:
        b = Fraction(k, 2) + 1
        b = b * (Fraction(l, 2) + 1) - 2
    elif k % 2 == 1 and l % 2 == 0:
        b = Fraction((k + 1) * (l + 2), 4) - 1
    elif k % 2 == 0:
        b = Fraction((k + 2) * (l + 1), 4) - 1
    else:
        b = Fraction((k + 1) * (l + 1), 4) - 1
    c = 1 if k % 3 == 0 and l % 3 == 0 else 0
    value = (a + 3 * b + 2 * c) / 6
    if value.denominator != 1:
        raise ConsistencyError(f"p3 closed form is not integral at ({k}, {l}): {value}")
    return int(value)


# shapes whose invariant question has a closed answer


def criterion_two_row(lam: Sequence[int]) -> bool:
    """Predicted positivity of the stable invariant dimension for two-row shapes."""
    lam = as_partition(lam)
    if not 1 <= len(lam) <= 2:
        raise ValueError(f"{lam} is not a one- or two-row partition")
    return lam != (1, 1)


def criterion_two_column(lam: Sequence[int]) -> int:
    """Predicted stable invariant dimension (0, 1 or 2) for shapes with at most two columns."""
    lam = as_partition(lam)
    if not lam or lam[0] > 2:
        raise ValueError(f"{lam} is not a nonempty partition with at most two columns")
    c1, c2 = (conjugate(lam) + (0,))[:2]
    if c1 == c2:
        return 2
    if c1 == c2 + 1:
        return 1
    return 0


def criterion_hook(a: int, b: int) -> bool:
    """Predicted positivity for the hook ``(a + 1, 1^b)``: ``a >= b(b+1)/2``."""
    if a < 0 or b < 0:
        raise ValueError("hook arms and legs are nonnegative")
    return a >= comb(b + 1, 2)


def hook_shape(a: int, b: int) -> Partition:
    return (a + 1,) + (1,) * b


# coefficient tables


def format_partition(p: Sequence[int], sep: str = "+") -> str:
    return sep.join(map(str, p)) if p else "0"


@dataclass(frozen=True)
class CoeffTable:
    rows: list[Partition]
    cols: list[Partition]
    entries: list[list[int]] = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entries do not match the row and column indices")

    def __getitem__(self, key: tuple[Sequence[int], Sequence[int]]) -> int:
        lam, mu = key
        return self.entries[self.rows.index(tuple(lam))][self.cols.index(tuple(mu))]

    def to_json(self) -> str:
        return json.dumps(
            {"rows": [list(r) for r in self.rows], "cols": [list(c) for c in self.cols], "entries": self.entries},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> CoeffTable:
        obj = json.loads(text)
        return cls(
            [tuple(r) for r in obj["rows"]],
            [tuple(c) for c in obj["cols"]],
            [list(map(int, r)) for r in obj["entries"]],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter=",", lineterminator="\n")
        writer.writerow([""] + [format_partition(c) for c in self.cols])
        for r, row in zip(self.rows, self.entries):
            writer.writerow([format_partition(r)] + row)
        return buf.getvalue()

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.entries) + "\n"


def _table_row(args: tuple[Partition, tuple[Partition, ...]]) -> list[int]:
    lam, cols = args
    return [restriction_coeff_stable(lam, mu) for mu in cols]


def restriction_table(max_size: int, jobs: int = 1) -> CoeffTable:
    """Stable restriction coefficients for all ``|lam|, |mu| <= max_size``.

    Rows are computed independently (in worker processes when ``jobs > 1``);
    assembly always follows the fixed block order.
    """
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    parts = partitions_upto(max_size)
    cols = tuple(parts)
    work = [(lam, cols) for lam in parts]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_table_row, work))
    else:
        entries = [_table_row(w) for w in work]
    return CoeffTable(list(parts), list(parts), entries)
