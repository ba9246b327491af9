from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supermf.partitions import partitions_of
from supermf.rootdata import (
    E6,
    E7,
    G2,
    SL,
    SO,
    Sp,
    GroupType,
    ProductGroup,
    cartan_matrix,
    dimension,
    dual_weight,
    format_weight,
    parse_group,
    parse_weight,
    partition_to_weight,
    positive_roots,
    spin_label,
    standard_weight,
    weight_to_partition,
)


@pytest.mark.parametrize(
    "g, w, dim",
    [
        (SL(2), (4,), 5),
        (SL(3), (1, 1), 8),
        (SL(4), (0, 1, 0), 6),
        (SO(7), (0, 0, 1), 8),
        (SO(9), (0, 0, 0, 1), 16),
        (SO(8), (0, 0, 1, 0), 8),
        (SO(8), (0, 1, 0, 0), 28),
        (Sp(4), (0, 1), 5),
        (Sp(6), (0, 0, 1), 14),
        (G2, (1, 0), 7),
        (G2, (0, 1), 14),
        (E6, (1, 0, 0, 0, 0, 0), 27),
        (E6, (0, 1, 0, 0, 0, 0), 78),
        (E7, (0, 0, 0, 0, 0, 0, 1), 56),
        (E7, (1, 0, 0, 0, 0, 0, 0), 133),
    ],
)
def test_weyl_dimensions(g, w, dim):
    assert dimension(g, w) == dim


def test_root_counts():
    # |Phi+| = dim(g) - rank over 2
    for g, n in [(SL(4), 6), (SO(7), 9), (Sp(6), 9), (SO(8), 12), (G2, 6), (E6, 36), (E7, 63)]:
        assert len(positive_roots(g)) == n
    assert cartan_matrix(G2) in (((2, -1), (-3, 2)), ((2, -3), (-1, 2)))


def test_group_validation():
    with pytest.raises(ValueError):
        GroupType("D", 2)
    with pytest.raises(ValueError):
        GroupType("E", 8)
    with pytest.raises(ValueError):
        Sp(5)
    assert SO(8) == GroupType("D", 4) and SO(7) == GroupType("B", 3)


def test_standard_weight_of_so3_is_the_vector():
    # omega_1 of B1 is the spin representation; the 3-dimensional module is 2*omega_1
    assert standard_weight(SO(3)) == (2,)
    assert dimension(SO(3), standard_weight(SO(3))) == 3
    for m in (5, 6, 7, 8):
        assert dimension(SO(m), standard_weight(SO(m))) == m
    assert dimension(Sp(6), standard_weight(Sp(6))) == 6


def test_duals():
    assert dual_weight(SL(3), (1, 0)) == (0, 1)
    assert dual_weight(SL(4), (2, 1, 0)) == (0, 1, 2)
    assert dual_weight(E6, (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    assert dual_weight(SO(8), spin_label(SO(8), "plus")) == spin_label(SO(8), "plus")
    assert dual_weight(SO(10), spin_label(SO(10), "plus")) == spin_label(SO(10), "minus")
    assert dual_weight(Sp(4), (1, 1)) == (1, 1)


def test_spin_labels():
    assert spin_label(SO(7), "full") == (0, 0, 1)
    assert {spin_label(SO(8), "plus"), spin_label(SO(8), "minus")} == {(0, 0, 1, 0), (0, 0, 0, 1)}
    with pytest.raises(ValueError):
        spin_label(SL(3), "full")


@given(st.integers(0, 7), st.sampled_from([SL(3), SL(4), SO(7), Sp(6), SO(8), SO(5)]))
def test_partition_labels_round_trip(n, g):
    limit = g.rank + 1 if g.family == "A" else g.rank
    for lam in partitions_of(n, max_length=limit):
        w = partition_to_weight(g, lam)
        if g.family == "A" and len(lam) == limit:
            continue  # full columns are invisible for SL
        assert weight_to_partition(g, w) == lam


def test_parse_group_and_weight():
    assert parse_group("SL(4)") == SL(4)
    assert parse_group("SO7") == SO(7)
    assert parse_group("SL2xSL2") == ProductGroup((SL(2), SL(2)))
    assert parse_group("A1xB3") == ProductGroup((SL(2), SO(7)))
    for bad in ("SO(4)", "SL(1)", "F4", "foo"):
        with pytest.raises(ValueError):
            parse_group(bad)
    assert parse_weight(SL(4), "[1,0,0]") == (1, 0, 0)
    assert parse_weight(SL(4), "part(2,1)") == (1, 1, 0)
    assert parse_weight(SO(3), "std") == (2,)
    assert parse_weight(G2, "triv") == (0, 0)
    with pytest.raises(ValueError):
        parse_weight(SL(4), "[1,0]")
    assert format_weight((1, 0, 2)) == "[1,0,2]"


def test_partition_label_examples():
    assert partition_to_weight(SL(4), (1,)) == (1, 0, 0)
    assert partition_to_weight(Sp(4), (1, 1), "sp") == (0, 1)
    assert dimension(Sp(4), (0, 1)) == 5
    assert partition_to_weight(SO(7), (1, 1, 1), "so") == (0, 0, 2)
    assert dimension(SO(7), (0, 0, 2)) == 35


def test_small_dimensions_and_spin_conventions():
    for k in range(8):
        assert dimension(SL(2), (k,)) == k + 1
    assert spin_label(SO(5), "full") == (0, 1)
    assert spin_label(SO(10), "plus") == (0, 0, 0, 1, 0)
    assert spin_label(SO(10), "minus") == (0, 0, 0, 0, 1)


def _ssyt_count(shape, n):
    # brute force: fill the diagram row by row with entries 1..n
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]

    def rec(k, filling):
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            total += rec(k + 1, filling)
        filling.pop((i, j), None)
        return total

    return rec(0, {})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weyl_dimension_counts_tableaux(n):
    g = SL(n)
    for size in range(7):
        for lam in partitions_of(size, max_length=n):
            assert dimension(g, partition_to_weight(g, lam)) == _ssyt_count(lam, n)
