"""Brute-force characters of Sym^d, wedge^d and Weyl modules of K^n.

Everything here is counted directly on one representative permutation per
cycle type: fixed multisets for ``Sym^d``, signed fixed subsets for
``wedge^d``.  No character polynomial is used, so agreement with
:mod:`charpoly.moments` is an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Mapping, Sequence

from .errors import ConsistencyError, FeasibilityError
from .partitions import Partition, as_partition, character_table, pad, partitions_of, z_alpha

ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class PermutationWitness:
    """A permutation of ``{0, ..., n-1}`` in one-line form."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.n or sorted(self.images) != list(range(self.n)):
            raise ValueError(f"{self.images} is not a permutation of {self.n} points")

    @classmethod
    def from_cycle_type(cls, beta: Sequence[int]) -> PermutationWitness:
        """Cycles laid out left to right: ``(3, 1)`` gives ``0->1->2->0, 3->3``."""
        images: list[int] = []
        start = 0
        for length in beta:
            images.extend(start + (k + 1) % length for k in range(length))
            start += length
        return cls(start, tuple(images))

    def cycle_type(self) -> Partition:
        seen = [False] * self.n
        lengths = []
        for i in range(self.n):
            if seen[i]:
                continue
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))

    def __call__(self, i: int) -> int:
        return self.images[i]


def _check_feasible(count: int, what: str) -> None:
    if count > ENUMERATION_LIMIT:
        raise FeasibilityError(f"{what} needs {count} enumerations, over the limit of {ENUMERATION_LIMIT}")


def trace_sym(w: PermutationWitness, d: int) -> int:
    """Number of size-``d`` multisets of points that ``w`` maps to themselves."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    _check_feasible(comb(w.n + d - 1, d), f"Sym^{d} on {w.n} points")
    count = 0
    for ms in combinations_with_replacement(range(w.n), d):
        if tuple(sorted(w(x) for x in ms)) == ms:
            count += 1
    return count


def _inversion_sign(seq: Sequence[int]) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def trace_alt(w: PermutationWitness, d: int) -> int:
    """Signed count of ``d``-subsets fixed by ``w``.

    The sign is that of ``w`` restricted to the subset, read off from the
    inversions of the image sequence.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    _check_feasible(comb(w.n, d), f"wedge^{d} on {w.n} points")
    total = 0
    for sub in combinations(range(w.n), d):
        img = [w(x) for x in sub]
        if sorted(img) == list(sub):
            # positions of the images within the (sorted) subset
            total += _inversion_sign([sub.index(y) for y in img])
    return total


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        if set(self.values) != set(partitions_of(self.n)):
            raise ValueError(f"class function must be defined on every partition of {self.n}")

    def __getitem__(self, beta: Sequence[int]) -> Fraction:
        return self.values[tuple(beta)]

    def inner(self, other: ClassFunction) -> Fraction:
        if other.n != self.n:
            raise ValueError("class functions on different groups")
        return sum(
            (Fraction(self.values[b]) * other.values[b] / z_alpha(b) for b in partitions_of(self.n)),
            Fraction(0),
        )

    @classmethod
    def trivial(cls, n: int) -> ClassFunction:
        return cls(n, {b: Fraction(1) for b in partitions_of(n)})

    @classmethod
    def irreducible(cls, nu: Sequence[int]) -> ClassFunction:
        nu = as_partition(nu)
        n = sum(nu)
        table = character_table(n)
        return cls(n, {b: Fraction(table[nu, b]) for b in partitions_of(n)})


def _int_det(rows: list[list[int]]) -> int:
    # Laplace expansion along the first row; matrices here are tiny
    if not rows:
        return 1
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * a * _int_det(minor)
    return total


@lru_cache(maxsize=None)
def _trace_sym_cached(beta: Partition, d: int) -> int:
    return trace_sym(PermutationWitness.from_cycle_type(beta), d)


def weyl_class_function(lam: Sequence[int], n: int) -> ClassFunction:
    """Character of ``W_lam(K^n)`` restricted to ``S_n``, as ``det(trace Sym^(lam_i + j - i))``."""
    lam = as_partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    l = len(lam)
    values = {}
    for beta in partitions_of(n):
        mat = [
            [_trace_sym_cached(beta, lam[i] + j - i) if lam[i] + j - i >= 0 else 0 for j in range(l)]
            for i in range(l)
        ]
        values[beta] = Fraction(_int_det(mat))
    return ClassFunction(n, values)


def decompose(f: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicity ``<f, chi_nu>`` of every irreducible ``nu`` of ``S_n``."""
    return {nu: f.inner(ClassFunction.irreducible(nu)) for nu in partitions_of(f.n)}


def oracle_restriction(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """Multiplicity of ``V_{mu[n]}`` in ``W_lam(K^n)`` by brute force."""
    mu = as_partition(mu)
    target = pad(mu, n)
    mult = decompose(weyl_class_function(lam, n))[target]
    if mult.denominator != 1 or mult < 0:
        raise ConsistencyError(f"multiplicity {mult} of {target} is not a nonnegative integer")
    return int(mult)
