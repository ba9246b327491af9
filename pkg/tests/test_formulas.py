from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermf import charengine as ce
from supermf.charengine import FormalChar
from supermf.formulas import (
    duality_skew,
    duality_sym,
    ext2_symk_sl2,
    ext_power_L2,
    ext_power_S2,
    fast_path,
    sym_power_L2,
    sym_power_S2,
    sym_sp_sl2,
    three_tensor,
)
from supermf.lr import GLFormalSum, schur_multiply
from supermf.rootdata import SL, SO, ProductGroup, Sp, partition_to_weight


def _oracle(g, label, kind, k):
    rep = FormalChar.irreducible(g, label)
    return ce.sym_power(g, rep, k) if kind == "sym" else ce.ext_power(g, rep, k)


def _fund(n, i):
    return tuple(1 if j == i - 1 else 0 for j in range(n - 1))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3), st.integers(2, 3), st.integers(0, 4))
def test_dualities_match_oracle(n, m, k):
    g = ProductGroup((SL(n), SL(m)))
    label = (_fund(n, 1), _fund(m, 1))
    assert duality_sym(n, m, k) == _oracle(g, label, "sym", k)
    assert duality_skew(n, m, k) == _oracle(g, label, "ext", k)


def test_duality_dimensions():
    # S^2(C^2 (x) C^2) has dimension 10, Lambda^2 has 6
    assert duality_sym(2, 2, 2).dimension() == 10
    assert duality_skew(2, 2, 2).dimension() == 6
    with pytest.raises(ValueError):
        duality_skew(2, 2, 5)
    with pytest.raises(ValueError):
        duality_sym(1, 2, 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(0, 4))
def test_quadratic_plethysms_match_oracle(n, k):
    two = tuple(2 if i == 0 else 0 for i in range(n - 1))
    assert sym_power_S2(n, k) == _oracle(SL(n), two, "sym", k)
    assert ext_power_S2(n, k) == _oracle(SL(n), two, "ext", k)
    if n >= 3:
        assert sym_power_L2(n, k) == _oracle(SL(n), _fund(n, 2), "sym", k)
        assert ext_power_L2(n, k) == _oracle(SL(n), _fund(n, 2), "ext", k)


def test_ext2_of_binary_forms():
    for k in range(1, 9):
        assert ext2_symk_sl2(k) == _oracle(SL(2), (k,), "ext", 2)
    assert dict(ext2_symk_sl2(4).items()) == {(6,): 1, (2,): 1}
    with pytest.raises(ValueError):
        ext2_symk_sl2(0)


def test_three_tensor_matches_lr():
    for k in range(1, 5):
        for l in range(1, k + 1):
            for cap in (None, 3, 2):
                one = [GLFormalSum.of(p, length_cap=cap) for p in ((k,), (l,), (1,))]
                assert three_tensor(k, l, cap) == schur_multiply(schur_multiply(*one[:2]), one[2])
    with pytest.raises(ValueError):
        three_tensor(1, 2)


def test_sym_of_sp_times_sl2():
    for n in (2, 3):
        g = ProductGroup((Sp(2 * n), SL(2)))
        label = (tuple(1 if i == 0 else 0 for i in range(n)), (1,))
        for k in range(7):
            assert sym_sp_sl2(n, k) == _oracle(g, label, "sym", k)


def test_fast_path_recognition():
    assert fast_path(SL(3), (1, 0), "sym", 3) == _oracle(SL(3), (1, 0), "sym", 3)
    assert fast_path(SL(3), (1, 0), "ext", 4) == FormalChar(SL(3), {})
    assert fast_path(SL(4), (0, 1, 0), "ext", 7) == FormalChar(SL(4), {})
    assert fast_path(SL(2), (3,), "ext", 2) == ext2_symk_sl2(3)
    assert fast_path(SL(3), (1, 1), "sym", 2) is None
    assert fast_path(SO(7), (1, 0, 0), "sym", 2) is None
    assert fast_path(SL(3), (1, 0), "sym", -1) is None


def _sl(n, lam):
    return partition_to_weight(SL(n), lam)


def test_duality_examples():
    assert dict(duality_sym(2, 2, 2).items()) == {((2,), (2,)): 1, ((0,), (0,)): 1}
    assert dict(duality_sym(3, 2, 0).items()) == {((0, 0), (0,)): 1}
    assert dict(duality_sym(2, 3, 3).items()) == {
        ((3,), _sl(3, (3,))): 1, ((1,), _sl(3, (2, 1))): 1}
    assert dict(duality_skew(2, 2, 2).items()) == {((2,), (0,)): 1, ((0,), (2,)): 1}
    assert dict(duality_skew(2, 3, 6).items()) == {((0,), (0, 0)): 1}
    assert dict(duality_skew(2, 3, 3).items()) == {
        ((3,), (0, 0)): 1, ((1,), _sl(3, (2, 1))): 1}


def test_plethysm_examples():
    assert dict(sym_power_S2(2, 2).items()) == {(4,): 1, (0,): 1}
    assert dict(sym_power_L2(4, 2).items()) == {(0, 0, 0): 1, _sl(4, (2, 2)): 1}
    assert dict(sym_power_S2(3, 0).items()) == {(0, 0): 1}
    assert dict(ext_power_S2(3, 2).items()) == {_sl(3, (3, 1)): 1}
    assert dict(ext_power_L2(4, 2).items()) == {_sl(4, (2, 1, 1)): 1}
    assert dict(ext_power_L2(4, 0).items()) == {(0, 0, 0): 1}
    assert dict(ext2_symk_sl2(3).items()) == {(4,): 1, (0,): 1}
    assert dict(ext2_symk_sl2(1).items()) == {(0,): 1}


def test_three_tensor_example():
    # {1}.{1}.{1} = {3} + 2{2,1} + {1,1,1}
    assert dict(three_tensor(1, 1, 3).items()) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
