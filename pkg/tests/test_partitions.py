"""Partition statistics, orderings and enumerators against brute force."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtspecials.errors import LengthMismatch, NotAPartition
from qtspecials.partitions import (
    bump,
    contains,
    enumerate_strips,
    enumerate_sub,
    format_partition,
    is_horizontal_strip,
    is_partition,
    parse_partition,
    partition,
    stats,
    sum_decompositions,
    valid_bumps,
    weight,
)


def boxes(lam):
    """Naive cross product of per-part ranges with a monotonicity filter."""
    return [p for p in product(*(range(x + 1) for x in lam)) if is_partition(p)]


@pytest.mark.parametrize("lam,expected", [
    ((0, 0), (0, 0, 0)),
    ((2, 1), (3, 1, 1)),
    ((3, 3, 1), (7, 5, 6)),
])
def test_stats(lam, expected):
    assert stats(lam) == expected


def test_partition_validation():
    assert partition([3, 2, 0]) == (3, 2, 0)
    with pytest.raises(NotAPartition):
        partition([1, 2])
    with pytest.raises(NotAPartition):
        partition([2, -1])


def test_parse_and_format():
    assert parse_partition("3,2,0") == (3, 2, 0)
    assert format_partition((3, 2, 0)) == "3,2,0"
    with pytest.raises(NotAPartition):
        parse_partition("1,2")


def test_contains():
    assert contains((3, 1), (2, 1))
    assert not contains((2, 2), (3, 0))
    with pytest.raises(LengthMismatch):
        contains((2, 1), (2,))


def test_horizontal_strip():
    assert is_horizontal_strip((3, 1), (2, 1))
    assert not is_horizontal_strip((3, 3), (2, 1))  # mu_1 < lam_2
    assert is_horizontal_strip((2, 1), (2, 1))


def test_enumerate_sub_goldens():
    assert enumerate_sub((1, 1)) == [(0, 0), (1, 0), (1, 1)]
    assert enumerate_sub((2, 1), weight_filter=2) == [(2, 0), (1, 1)]
    assert enumerate_sub((0, 0)) == [(0, 0)]


def test_enumerate_sub_order_is_weight_then_reverse_lex():
    out = enumerate_sub((2, 2))
    assert out == sorted(out, key=lambda p: (weight(p), tuple(-x for x in p)))


@given(st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_enumerate_sub_matches_brute_force(parts):
    lam = tuple(sorted(parts, reverse=True))
    assert set(enumerate_sub(lam)) == set(boxes(lam))
    assert len(enumerate_sub(lam)) == len(boxes(lam))


def test_enumerate_strips_examples():
    assert set(enumerate_strips((1, 0))) == {(0, 0), (1, 0)}
    assert set(enumerate_strips((2, 2))) == {(2, 0), (2, 1), (2, 2)}
    assert enumerate_strips((0, 0, 0)) == [(0, 0, 0)]


def test_enumerate_strips_matches_filtered_brute_force():
    for lam in enumerate_sub((3, 2, 2)):
        expect = [nu for nu in boxes(lam) if is_horizontal_strip(lam, nu)]
        assert set(enumerate_strips(lam)) == set(expect)


def test_strip_implies_contains():
    for lam in enumerate_sub((4, 3)):
        for nu in enumerate_strips(lam):
            assert contains(lam, nu)


def test_sum_decompositions():
    assert set(sum_decompositions((1, 0))) == {((1, 0), (0, 0)), ((0, 0), (1, 0))}
    assert sum_decompositions((0, 0)) == [((0, 0), (0, 0))]
    got = sum_decompositions((2, 1))
    # nu = (2,0) drops out: its complement (0,1) is not a partition
    assert set(got) == {
        ((0, 0), (2, 1)), ((1, 0), (1, 1)), ((1, 1), (1, 0)), ((2, 1), (0, 0)),
    }
    for nu, mu in got:
        assert is_partition(nu) and is_partition(mu)
        assert tuple(a + b for a, b in zip(nu, mu)) == (2, 1)


def test_bump():
    assert bump((2, 1), 1) == (3, 1)
    assert bump((2, 1), 2) == (2, 2)
    with pytest.raises(NotAPartition):
        bump((2, 2), 2)
    assert valid_bumps((2, 2, 1)) == [1, 3]
