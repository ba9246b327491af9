from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermf import charengine as ce
from supermf.charengine import FormalChar
from supermf.rootdata import G2, SL, SO, Sp
from supermf.superalg import (
    MFVerdict,
    MultiIndex,
    RepDiagram,
    Submodule,
    Witness,
    dual_flip,
    expected_dimension,
    graded_component,
    is_super_mf,
    make_diagram,
    multi_indices,
    restrict,
    select_witness,
    split_components,
    subdiagrams,
)


def g2_pair():
    return make_diagram([G2], [("even", [(1, 0)]), ("odd", [(1, 0)])], "g2")


def sl_chain(n=2, m=2):
    # C^n (x) C^2 even, C^2 (x) C^m odd
    return make_diagram(
        [SL(n), SL(2), SL(m)],
        [("even", [(1,) + (0,) * (n - 2), (1,), (0,) * (m - 1)]),
         ("odd", [(0,) * (n - 1), (1,), (1,) + (0,) * (m - 2)])],
        "chain",
    )


def test_g2_witness():
    v = is_super_mf(g2_pair(), 3)
    assert v.status == "not_mf"
    assert v.witness.multiindex.format(g2_pair()) == "(1|2)"
    assert v.witness.label == ((1, 0),) and v.witness.multiplicity == 2


def test_component_by_hand():
    d = g2_pair()
    # Lambda^2 of the 7-dimensional module = 7 + 14
    fc = graded_component(d, (0, 2))
    assert dict(fc.items()) == {((1, 0),): 1, ((0, 1),): 1}
    assert graded_component(d, (0, 8)) == FormalChar(d.group, {})
    assert expected_dimension(d, MultiIndex((2, 3))) == 28 * 35


def test_mf_example():
    # C^n + C^n (even, odd) of SL_n: S^i (x) Lambda^j is a Pieri product, MF
    d = make_diagram([SL(3)], [("even", [(1, 0)]), ("odd", [(1, 0)])])
    v = is_super_mf(d, 5)
    assert v.is_mf and v.witness is None
    assert v.components_checked == len(list(multi_indices(d, 5)))


def test_parallel_verdict_is_identical():
    d = g2_pair()
    assert is_super_mf(d, 4, jobs=4) == is_super_mf(d, 4)
    d = sl_chain(3, 2)
    assert is_super_mf(d, 4, jobs=3) == is_super_mf(d, 4)


def test_multi_indices_cap_odd_degrees():
    d = make_diagram([SL(2)], [("odd", [(1,)])])
    assert [i.degrees for i in multi_indices(d, 5)] == [(0,), (1,), (2,)]
    with pytest.raises(ValueError):
        is_super_mf(d, 0)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_component_dimensions(i, j):
    d = sl_chain(2, 3)
    assert graded_component(d, (i, j)).dimension() == expected_dimension(d, MultiIndex((i, j)))


def test_select_witness_picks_smallest_label():
    fc = FormalChar(SL(3), {(2, 0): 2, (0, 1): 3, (1, 1): 1})
    assert select_witness(fc) == ((0, 1), 3)
    assert select_witness(FormalChar(SL(3), {(1, 0): 1})) is None


def test_verdict_validation():
    w = Witness(MultiIndex((1, 1)), ((0,),), 2)
    with pytest.raises(ValueError):
        MFVerdict("not_mf", 3)
    with pytest.raises(ValueError):
        MFVerdict("mf_up_to_bound", 3, w)
    with pytest.raises(ValueError):
        MFVerdict("not_mf", 3, Witness(MultiIndex((1,)), ((0,),), 1))
    with pytest.raises(ValueError):
        MultiIndex((-1,))


def test_diagram_validation():
    with pytest.raises(ValueError):
        make_diagram([SL(2)], [("even", [(0,)])])
    with pytest.raises(ValueError):
        make_diagram([SL(2)], [("even", [(1,), (1,)])])
    with pytest.raises(ValueError):
        Submodule("neutral", ((1,),))
    with pytest.raises(ValueError):
        RepDiagram((SL(2), SL(2)), (Submodule("even", ((1,), (1,))),), "x", ("A", "A"))
    with pytest.raises(ValueError):
        make_diagram([SL(3)], [("even", [(1,)])])


def test_dual_flip():
    d = make_diagram([SL(3), SL(2)], [("even", [(1, 0), (1,)]), ("odd", [(1, 0), (0,)])])
    f = dual_flip(d, 1)
    assert f.submodules[1].dual_mark and f.effective_weights(1) == ((0, 1), (0,))
    assert dual_flip(f, 1) == d
    with pytest.raises(IndexError):
        dual_flip(d, 2)
    # flipping every submodule is the outer automorphism: verdict unchanged
    both = dual_flip(dual_flip(d, 0), 1)
    assert is_super_mf(both, 4) == is_super_mf(d, 4)


def test_subdiagrams_and_components():
    d = sl_chain(3, 3)
    assert d.is_connected()
    subs = subdiagrams(d)
    assert subs[0] == d
    assert len(subs) == len(set(subs))
    assert all(s.is_connected() for s in subs)
    # the single submodules on their supports appear
    names = {tuple(sorted(map(str, s.factors))) for s in subs}
    assert ("A1", "A2") in names
    # deleting the middle factor disconnects the chain
    r = restrict(d, [0, 2], [0, 1])
    assert not r.is_connected()
    assert len(split_components(r)) == 2
    assert restrict(d, [1], []) is None


@pytest.mark.parametrize("d", [sl_chain(2, 2), sl_chain(3, 2)])
def test_subdiagram_closure(d):
    if is_super_mf(d, 4).is_mf:
        for s in subdiagrams(d):
            assert is_super_mf(s, 4).is_mf


def test_classical_factors():
    d = make_diagram([Sp(4), SO(5)], [("even", [(1, 0), (1, 0)])])
    assert graded_component(d, (2,)).dimension() == 210


def test_component_examples():
    d = make_diagram([Sp(6)], [("even", [(1, 0, 0)]), ("odd", [(1, 0, 0)])])
    assert dict(graded_component(d, (2, 2)).items()) == {
        ((2, 0, 0),): 2, ((1, 0, 1),): 1, ((0, 1, 0),): 1, ((2, 1, 0),): 1}
    assert dict(graded_component(d, (0, 0)).items()) == {((0, 0, 0),): 1}
    d = make_diagram([SL(2), SO(7)], [("odd", [(1,), (1, 0, 0)])])
    expected = ce.ext_power(d.group, ce.FormalChar.irreducible(d.group, ((1,), (1, 0, 0))), 3)
    assert graded_component(d, (3,)) == expected


def test_two_copies_of_the_bimodule():
    d = make_diagram([SL(3), SL(3)], [("even", [(1, 0), (1, 0)]), ("odd", [(1, 0), (1, 0)])])
    v = is_super_mf(d, 6)
    assert not v.is_mf
    # C^3 C^3 (x) L^2(C^3 C^3) already repeats {2,1} x {2,1}
    assert v.witness.multiindex.degrees == (1, 2)
    assert v.witness.label == ((1, 1), (1, 1)) and v.witness.multiplicity == 2
    assert graded_component(d, (3, 3)).repeated()


def test_small_mf_and_flip_examples():
    d = make_diagram([SL(2), SL(2)], [("even", [(1,), (1,)]), ("odd", [(0,), (1,)])])
    assert is_super_mf(d, 4).is_mf
    sp = make_diagram([Sp(4), SL(2)], [("even", [(1, 0), (1,)]), ("odd", [(1, 0), (0,)])])
    assert dual_flip(sp, 1).effective_weights(1) == sp.effective_weights(1)
    assert is_super_mf(dual_flip(sp, 1), 4) == is_super_mf(sp, 4)
    n3 = make_diagram([SL(3)], [("even", [(1, 0)]), ("odd", [(1, 0)])])
    assert is_super_mf(dual_flip(n3, 1), 5).is_mf == is_super_mf(n3, 5).is_mf


def test_subdiagram_examples():
    single = make_diagram([SL(3)], [("even", [(1, 0)])])
    assert subdiagrams(single) == [single]
    apart = make_diagram([SL(2), SL(3)], [("even", [(1,), (0, 0)]), ("odd", [(0,), (1, 0)])])
    subs = subdiagrams(apart)
    assert len(subs) == 3 and subs[0] == apart
    assert {s.factors for s in subs[1:]} == {(SL(2),), (SL(3),)}
    # SL_4 x SL_2 x SO_7 chain contains SL_2 x SO_7 with C^2 even and C^2 C^7 odd
    chain = make_diagram([SL(4), SL(2), SO(7)],
                         [("even", [(1, 0, 0), (1,), (0, 0, 0)]), ("odd", [(0, 0, 0), (1,), (1, 0, 0)])])
    want = make_diagram([SL(2), SO(7)], [("even", [(1,), (0, 0, 0)]), ("odd", [(1,), (1, 0, 0)])])
    assert any(s.factors == want.factors and s.submodules == want.submodules for s in subdiagrams(chain))
