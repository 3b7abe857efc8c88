from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charpoly import partitions as P
from charpoly.partitions import (
    as_partition,
    character,
    character_table,
    conjugate,
    hook_dimension,
    mn_character,
    pad,
    partitions_of,
    partitions_upto,
    sigma_character,
    vertical_strip_subpartitions,
    z_alpha,
)


def test_enumeration_order():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [()]
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert len(partitions_upto(5)) == 19


def test_validation():
    assert as_partition([3, 0, 1]) == (3, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([2, -1])


def test_z_alpha():
    assert z_alpha(()) == 1
    assert z_alpha((1, 1, 1)) == 6
    assert z_alpha((2, 2, 1)) == 8
    for n in range(7):
        assert sum(Fraction(1, z_alpha(b)) for b in partitions_of(n)) == 1


def test_conjugate_and_pad():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert pad((1,), 3) == (2, 1)
    assert pad((), 2) == (2,)
    with pytest.raises(ValueError):
        pad((2,), 3)


def test_vertical_strips():
    assert vertical_strip_subpartitions((2, 1)) == [(2, 1), (2,), (1, 1), (1,)]
    assert vertical_strip_subpartitions(()) == [()]


def test_s3_character_table():
    rows = {lam: [mn_character(lam, a) for a in partitions_of(3)] for lam in partitions_of(3)}
    assert rows == {(3,): [1, 1, 1], (2, 1): [-1, 0, 2], (1, 1, 1): [1, -1, 1]}


def test_s4_known_values():
    assert mn_character((2, 2), (2, 2)) == 2
    assert mn_character((3, 1), (4,)) == -1
    assert mn_character((2, 1, 1), (3, 1)) == 0
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality(n):
    parts = partitions_of(n)
    for lam in parts:
        for mu in parts:
            ip = sum(Fraction(character(lam, a) * character(mu, a), z_alpha(a)) for a in parts)
            assert ip == (1 if lam == mu else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_lengths_give_degrees(n):
    for lam in partitions_of(n):
        assert hook_dimension(lam) == character(lam, (1,) * n)


def _sigma_brute(lam, alpha):
    # ordered set partitions of the points into blocks of sizes lam, fixed by w
    n = sum(alpha)
    images, start = [], 0
    for length in alpha:
        images.extend(start + (k + 1) % length for k in range(length))
        start += length
    count = 0
    for labels in product(range(len(lam)), repeat=n):
        if [labels.count(i) for i in range(len(lam))] != list(lam):
            continue
        if all(labels[images[x]] == labels[x] for x in range(n)):
            count += 1
    return count


@pytest.mark.parametrize("n", range(1, 7))
def test_sigma_against_brute_force(n):
    for lam in partitions_of(n):
        for alpha in partitions_of(n):
            assert sigma_character(lam, alpha) == _sigma_brute(lam, alpha)


def test_sigma_at_identity_is_multinomial():
    assert sigma_character((2, 1), (1, 1, 1)) == 3
    assert sigma_character((2, 2), (1, 1, 1, 1)) == 6


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_conjugation_twists_by_sign(lam):
    for alpha in partitions_of(sum(lam)):
        sign = (-1) ** (sum(lam) - len(alpha))
        assert mn_character(conjugate(lam), alpha) == sign * mn_character(lam, alpha)


def test_character_table_cache(tmp_path, monkeypatch):
    monkeypatch.setattr(P, "_tables", {})
    P.set_cache_dir(tmp_path)
    try:
        table = character_table(4)
        path = tmp_path / "chartable_4.json"
        raw = json.loads(path.read_text())
        assert raw["[2,1,1]|[3,1]"] == "0"
        assert raw["[2,2]|[2,2]"] == "2"
        # a fresh process would read the file back
        monkeypatch.setattr(P, "_tables", {})
        assert character_table(4) == table
        # a corrupt file is ignored and recomputed
        path.write_text("{not json")
        monkeypatch.setattr(P, "_tables", {})
        assert character_table(4) == table
    finally:
        P.set_cache_dir(None)
