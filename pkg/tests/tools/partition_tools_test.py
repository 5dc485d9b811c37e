from math import comb

import pytest

from mrank.models.qudit_dims import QuditDims
from mrank.tools import partition_tools
from mrank.util.errors import LevelOutOfRangeError


# --------------------------------------------- enumerate_bipartitions ---------------------------------------------
def test_enumerate_level_one():
    level = partition_tools.enumerate_bipartitions(QuditDims.of(2, 3, 4), 1)
    assert [b.subset for b in level] == [(1,), (2,), (3,)]
    assert [b.complement for b in level] == [(2, 3), (1, 3), (1, 2)]
    assert [(b.d_subset, b.d_complement) for b in level] == [(2, 12), (3, 8), (4, 6)]


def test_enumerate_balanced_level_lists_both_members():
    level = partition_tools.enumerate_bipartitions(QuditDims.of(2, 2, 2, 2), 2)
    assert [b.subset for b in level] == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_enumerate_counts():
    dims = QuditDims.of([3] * 6)
    assert [len(level) for level in partition_tools.all_levels(dims)] == [6, 15, 20]


def test_enumerate_sides_partition_parties():
    for level in partition_tools.all_levels(QuditDims.of([2] * 5)):
        for b in level:
            assert sorted(b.subset + b.complement) == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("ell", [0, 3])
def test_enumerate_level_out_of_range(ell):
    with pytest.raises(LevelOutOfRangeError):
        partition_tools.enumerate_bipartitions(QuditDims.of(2, 2, 2, 2, 2), ell)


# --------------------------------------------- canonical_cut ---------------------------------------------
def test_canonical_cut():
    assert partition_tools.canonical_cut([2, 3, 4], 4) == (1,)
    assert partition_tools.canonical_cut([3, 4], 4) == (1, 2)
    assert partition_tools.canonical_cut([1, 4], 4) == (1, 4)
    assert partition_tools.canonical_cut([2], 5) == (2,)


def test_canonical_cut_trivial():
    with pytest.raises(ValueError):
        partition_tools.canonical_cut([1, 2, 3], 3)
    with pytest.raises(ValueError):
        partition_tools.canonical_cut([], 3)


# --------------------------------------------- dedupe_level ---------------------------------------------
def test_dedupe_balanced_level():
    level = partition_tools.enumerate_bipartitions(QuditDims.of(2, 2, 2, 2), 2)
    kept = partition_tools.dedupe_level(level)
    assert [(b.subset, partner.subset) for b, partner in kept] == [
        ((1, 2), (3, 4)),
        ((1, 3), (2, 4)),
        ((1, 4), (2, 3)),
    ]


def test_dedupe_unbalanced_level_is_unchanged():
    level = partition_tools.enumerate_bipartitions(QuditDims.of(2, 2, 2), 1)
    assert partition_tools.dedupe_level(level) == [(b, None) for b in level]


@pytest.mark.parametrize("n", range(2, 13))
def test_enumerate_matches_power_set(n):
    dims = QuditDims(dims=(2,) * n)
    power_set = [
        tuple(j + 1 for j in range(n) if mask >> j & 1) for mask in range(1 << n)
    ]
    for ell in range(1, n // 2 + 1):
        level = partition_tools.enumerate_bipartitions(dims, ell)
        assert len(level) == comb(n, ell)
        assert [b.subset for b in level] == sorted(s for s in power_set if len(s) == ell)
