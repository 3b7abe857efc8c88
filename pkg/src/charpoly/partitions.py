"""Integer partitions and symmetric-group characters.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition.  Enumeration is reverse-lexicographic within a
size, e.g. ``(4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)``.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from pathlib import Path
from typing import Iterable, Mapping, Sequence

Partition = tuple[int, ...]

log = logging.getLogger(__name__)


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise: drop zeros, require weak decrease."""
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not weakly decreasing")
    return p


def size(p: Sequence[int]) -> int:
    return sum(p)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_partitions(n, n))


def partitions_upto(max_size: int) -> list[Partition]:
    """Partitions of 0, 1, ..., max_size in block order (the table layout)."""
    return [p for n in range(max_size + 1) for p in partitions_of(n)]


def to_exponential(p: Sequence[int]) -> dict[int, int]:
    """``{i: a_i}`` where ``a_i`` counts the parts equal to ``i``."""
    mult: dict[int, int] = {}
    for x in p:
        mult[x] = mult.get(x, 0) + 1
    return dict(sorted(mult.items()))


def from_exponential(mult: Mapping[int, int]) -> Partition:
    parts: list[int] = []
    for i in sorted(mult, reverse=True):
        if mult[i] < 0 or i < 1:
            raise ValueError(f"bad multiplicity {i}^{mult[i]}")
        parts.extend([i] * mult[i])
    return tuple(parts)


def z_alpha(alpha: Sequence[int]) -> int:
    """Centralizer order ``prod_i i^a_i a_i!`` of a permutation of cycle type alpha."""
    return prod(i**a * factorial(a) for i, a in to_exponential(alpha).items())


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def pad(mu: Sequence[int], n: int) -> Partition:
    """The padded partition ``(n - |mu|, mu_1, mu_2, ...)``."""
    mu = tuple(mu)
    first = n - sum(mu)
    if first < 0 or (mu and first < mu[0]):
        raise ValueError(f"cannot pad {mu} to {n}: need n >= {sum(mu) + (mu[0] if mu else 0)}")
    return as_partition((first,) + mu)


def vertical_strip_subpartitions(lam: Sequence[int]) -> list[Partition]:
    """Every mu inside lam such that lam/mu has at most one box per row, lam first."""
    lam = tuple(lam)
    out = []
    for drop in product((0, 1), repeat=len(lam)):
        mu = [x - d for x, d in zip(lam, drop)]
        if all(a >= b for a, b in zip(mu, mu[1:])):
            out.append(as_partition(mu))
    return out


def cycle_counts(beta: Sequence[int]) -> dict[int, int]:
    """Cycle type as the map ``i -> number of i-cycles``."""
    return to_exponential(beta)


def _check_sizes(lam, alpha):
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: |{tuple(lam)}| = {sum(lam)} but |{tuple(alpha)}| = {sum(alpha)}")


# Murnaghan-Nakayama on beta-sets: a rim hook of length k is a bead moved k
# places down onto an empty position; its height counts the beads jumped.


def _rim_hook_removals(lam: Partition, k: int):
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    for b in beta:
        t = b - k
        if t < 0 or t in beads:
            continue
        height = sum(1 for x in beta if t < x < b)
        new = sorted((beads - {b}) | {t}, reverse=True)
        mu = as_partition(new[i] - (length - 1 - i) for i in range(length))
        yield mu, height


@lru_cache(maxsize=None)
def _mn(lam: Partition, alpha: Partition) -> int:
    if not alpha:
        return 1
    k, rest = alpha[0], alpha[1:]
    total = 0
    for mu, height in _rim_hook_removals(lam, k):
        total += -_mn(mu, rest) if height % 2 else _mn(mu, rest)
    return total


def mn_character(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """Irreducible character value chi_lam at cycle type alpha."""
    lam, alpha = as_partition(lam), tuple(sorted(alpha, reverse=True))
    _check_sizes(lam, alpha)
    return _mn(lam, alpha)


@lru_cache(maxsize=None)
def _sigma(lam: Partition, a: tuple[int, ...]) -> int:
    # a[j-1] = number of j-cycles still unassigned; fill one block (row) at a time
    if not lam:
        return 1 if not any(a) else 0
    target, rest = lam[0], lam[1:]
    total = 0

    def fill(j: int, remaining: int, avail: list[int], weight: int):
        nonlocal total
        if remaining == 0:
            total += weight * _sigma(rest, tuple(avail))
            return
        if j == 0:
            return
        for b in range(min(avail[j - 1], remaining // j), -1, -1):
            w = weight * comb(avail[j - 1], b)
            avail[j - 1] -= b
            fill(j - 1, remaining - j * b, avail, w)
            avail[j - 1] += b

    fill(len(a), target, list(a), 1)
    return total


def sigma_character(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """Permutation character of S_d on ordered set partitions of block sizes lam.

    Counted as the sum over arrays ``b[i][j]`` (number of j-cycles placed in
    block i) of products of multinomials ``a_j! / prod_i b[i][j]!``.
    """
    lam = as_partition(lam)
    _check_sizes(lam, alpha)
    mult = to_exponential(alpha)
    a = tuple(mult.get(j, 0) for j in range(1, max(mult, default=0) + 1))
    return _sigma(lam, a)


def hook_dimension(lam: Sequence[int]) -> int:
    """Degree of chi_lam by the hook length formula."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks


# character tables, optionally persisted

_cache_lock = threading.Lock()
_cache_dir: Path | None = None


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Directory for persisted character tables; ``None`` disables persistence."""
    global _cache_dir
    with _cache_lock:
        _cache_dir = Path(path) if path else None


def _table_key(lam: Partition, alpha: Partition) -> str:
    return f"{json.dumps(list(lam), separators=(',', ':'))}|{json.dumps(list(alpha), separators=(',', ':'))}"


def _compute_table(d: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(d)
    return {(lam, alpha): _mn(lam, alpha) for lam in parts for alpha in parts}


def _load_table(path: Path, d: int) -> dict[tuple[Partition, Partition], int] | None:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError):
        return None
    parts = partitions_of(d)
    table = {}
    for lam in parts:
        for alpha in parts:
            v = raw.get(_table_key(lam, alpha))
            if v is None:
                return None
            table[lam, alpha] = int(v)
    return table


_tables: dict[int, dict[tuple[Partition, Partition], int]] = {}


def character_table(d: int) -> dict[tuple[Partition, Partition], int]:
    """``{(lam, alpha): chi_lam(alpha)}`` for all lam, alpha of size d."""
    table = _tables.get(d)
    if table is not None:
        return table
    cache_dir = _cache_dir
    path = cache_dir / f"chartable_{d}.json" if cache_dir else None
    if path is not None and path.exists():
        table = _load_table(path, d)
        if table is None:
            log.warning("ignoring unreadable character table cache %s", path)
    if table is None:
        table = _compute_table(d)
        if path is not None:
            payload = {_table_key(lam, alpha): str(v) for (lam, alpha), v in table.items()}
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(f".{os.getpid()}.tmp")
                tmp.write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")
                tmp.replace(path)
            except OSError as exc:
                log.warning("could not write character table cache %s: %s", path, exc)
    with _cache_lock:
        _tables.setdefault(d, table)
    return _tables[d]


def character(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """chi_lam(alpha) looked up through the per-degree table."""
    lam, alpha = as_partition(lam), tuple(sorted(alpha, reverse=True))
    _check_sizes(lam, alpha)
    return character_table(sum(lam))[lam, alpha]
