from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supermf.partitions import (
    add_horizontal_strip,
    add_vertical_strip,
    conjugate,
    contains,
    format_partition,
    from_frobenius,
    hook,
    nested_hooks,
    parse_partition,
    partition,
    partitions_of,
)

partitions = st.integers(0, 12).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


def test_partition_normalizes_and_validates():
    assert partition([3, 1, 0, 0]) == (3, 1)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_partition_counts():
    # p(n) for n = 0..10
    assert [len(list(partitions_of(n))) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert sorted(partitions_of(4, max_length=2)) == [(2, 2), (3, 1), (4,)]
    assert sorted(partitions_of(4, max_part=2)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2)]


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partitions, st.integers(0, 4))
def test_strips_add_the_right_number_of_boxes(lam, l):
    for mu in add_horizontal_strip(lam, l, 20):
        assert sum(mu) == sum(lam) + l and contains(mu, lam)
        # no two new boxes in one column
        assert all(c - d <= 1 for c, d in zip(conjugate(mu), conjugate(lam) + (0,) * 20))
    horiz = add_horizontal_strip(conjugate(lam), l, 20)
    vert = add_vertical_strip(lam, l, 20)
    assert {conjugate(mu) for mu in horiz} == vert


def test_pieri_count_matches_hook_length_formula():
    # number of standard tableaux = number of chains of single boxes
    def f(lam):
        n = sum(lam)
        hooks = 1
        conj = conjugate(lam)
        for i, row in enumerate(lam):
            for j in range(row):
                hooks *= row - j + conj[j] - i - 1
        return factorial(n) // hooks

    counts = {(): 1}
    for n in range(1, 7):
        nxt = {}
        for lam, c in counts.items():
            for mu in add_horizontal_strip(lam, 1, n):
                nxt[mu] = nxt.get(mu, 0) + c
        counts = nxt
    assert all(counts[lam] == f(lam) for lam in counts)


def test_hooks_and_frobenius():
    assert hook(3, 2) == (3, 1, 1)
    assert from_frobenius([2], [2]) == (3, 1, 1)
    assert from_frobenius([3, 1], [2, 0]) == (4, 3, 1)
    assert from_frobenius([], []) == ()
    with pytest.raises(ValueError):
        from_frobenius([1, 2], [1, 0])


def test_nested_hooks_small_cases():
    # (r+1, r-1)-hooks: r = 1 gives (2); r = 2 gives (3,1)
    assert nested_hooks(1, "sym-skew") == {(2,)}
    assert nested_hooks(2, "sym-skew") == {(3, 1)}
    assert nested_hooks(3, "sym-skew") == {(4, 1, 1), (3, 3)}
    assert nested_hooks(1, "ext-skew") == {(1, 1)}
    assert nested_hooks(3, "ext-skew") == {(3, 1, 1, 1), (2, 2, 2)}
    with pytest.raises(ValueError):
        nested_hooks(2, "other")


@given(st.integers(0, 8))
def test_nested_hooks_have_size_2n(n):
    for kind in ("sym-skew", "ext-skew"):
        assert all(sum(lam) == 2 * n for lam in nested_hooks(n, kind))


def test_parse_and_format_round_trip():
    assert parse_partition("(3,2,1)") == (3, 2, 1)
    assert parse_partition(" ( 2 , 2 ) ") == (2, 2)
    assert parse_partition("()") == ()
    assert format_partition((3, 2, 1)) == "(3,2,1)"
    for bad in ("3,2", "(1,2)", "(a)"):
        with pytest.raises(ValueError):
            parse_partition(bad)
