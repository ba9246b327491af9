"""Witness data: components that contain a repeated irreducible.

Each ``WitnessCase`` names a diagram, a multi-index (one degree per
submodule, in diagram order) and the label expected with multiplicity at
least two.  ``full`` optionally gives the complete decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..rootdata import E6, G2, SL, SO, Sp, GroupType, partition_to_weight, spin_label
from ..superalg import RepDiagram
from .catalog import diagram, ext2, std, sym2


@dataclass(frozen=True)
class WitnessCase:
    case_id: str
    anchor: str
    diagram: RepDiagram
    idx: tuple[int, ...]
    label: tuple
    full: dict | None = None
    # label exactly as printed in the source table, when it differs from ``label``
    printed: tuple | None = None

    @property
    def printed_label(self) -> tuple:
        return self.printed if self.printed is not None else self.label


def _p(g: GroupType, *lam: int):
    return partition_to_weight(g, lam)


def _simple(name, g, even_w, odd_w) -> RepDiagram:
    return diagram(name, [g], [("even", {0: even_w}), ("odd", {0: odd_w})])


def _case(cid, anchor, d, idx, *label, full=None, printed=None) -> WitnessCase:
    return WitnessCase(cid, anchor, d, tuple(idx), tuple(label), full, printed)


def _named(anchor, d, idx, *label, full=None, printed=None) -> WitnessCase:
    """Case whose id is the diagram name without spaces."""
    return _case(d.name.replace(" ", ""), anchor, d, idx, *label, full=full, printed=printed)


def simple_group_cases() -> list[WitnessCase]:
    out = []
    # type A
    for n in (4, 5):
        g = SL(n)
        out.append(_named("P^(2|3) = {2}.({4,1^2}+{3^2}) ∋ 2·{4,3,1}",
                         _simple(f"SL{n}: C + S2", g, std(g), sym2(g)), (2, 3), _p(g, 4, 3, 1)))
    for n in (5, 6):
        g = SL(n)
        out.append(_named("P^(2|5) ∋ 2·{4,3,2^2,1}",
                         _simple(f"SL{n}: C + L2", g, std(g), ext2(g)), (2, 5), _p(g, 4, 3, 2, 2, 1)))
    s2 = SL(2)
    for p in range(3, 7):
        # {2}.Lambda^2 S^p = {2}.({2p-2} + {2p-6} + ...) repeats {2p-4}
        out.append(_named(f"P^(2|2)(SL2: C^2 + S^{p}) ∋ 2·{{{2 * p - 4}}}",
                         _simple(f"SL2: C + S{p}", s2, (1,), (p,)), (2, 2), (2 * p - 4,),
                         printed=((2 * p - 2,),)))
    s3, s6, s4 = SL(3), SL(6), SL(4)
    out.append(_named("P^(2|2) = {2}.({3^2}+{5,1}) ∋ 2·{5,3}",
                     _simple("SL3: C + S3", s3, std(s3), _p(s3, 3)), (2, 2), _p(s3, 5, 3)))
    out.append(_named("P^(2|5)(C^6 + L3) ∋ 2·{3,1^2}",
                     _simple("SL6: C + L3", s6, std(s6), _p(s6, 1, 1, 1)), (2, 5), _p(s6, 3, 1, 1)))
    for n in (2, 3):
        g = SL(n)
        out.append(_named("P^(2|1) = ({2^2}+{4}).{2} ∋ 2·{4,2}",
                         _simple(f"SL{n}: S2 + S2", g, sym2(g), sym2(g)), (2, 1), _p(g, 4, 2)))
    for n in (4, 5):
        g = SL(n)
        out.append(_named("P^(2|2) = ({2^2}+{4}).{2,1^2} ∋ 2·{4,2,1^2}",
                         _simple(f"SL{n}: S2 + L2", g, sym2(g), ext2(g)), (2, 2), _p(g, 4, 2, 1, 1)))
    for p in range(3, 7):
        out.append(_named(f"P^(1|2)(SL2: S^2 + S^{p}) = P^(2|2)(C^2 + S^{p}) ∋ 2·{{{2 * p - 4}}}",
                         _simple(f"SL2: S2 + S{p}", s2, (2,), (p,)), (1, 2), (2 * p - 4,),
                         printed=((2 * p - 2,),)))
    out.append(_named("P^(1|2)(S^2 + S^3 of SL3) ∋ 2·{5,3}",
                     _simple("SL3: S2 + S3", s3, sym2(s3), _p(s3, 3)), (1, 2), _p(s3, 5, 3)))
    out.append(_named("P^(1|5)(S^2 + L3 of SL6) ∋ 2·{3,1^2}",
                     _simple("SL6: S2 + L3", s6, sym2(s6), _p(s6, 1, 1, 1)), (1, 5), _p(s6, 3, 1, 1)))
    for n in (4, 5):
        g = SL(n)
        out.append(_named("P^(3|2) = ({3^2}+{2^2,1^2}+...).{1^2} ∋ 2·{3^2,1^2}",
                         _simple(f"SL{n}: L2 + C", g, ext2(g), std(g)), (3, 2), _p(g, 3, 3, 1, 1)))
    for n in (3, 4):
        g = SL(n)
        out.append(_named("P^(5|3) = {5^2}.({4,1^2}+{3^2}) ∋ 2·{8,6,2}",
                         _simple(f"SL{n}: L2 + S2", g, ext2(g), sym2(g)), (5, 3), _p(g, 8, 6, 2)))
    out.append(_named("P^(6|3) ∋ 2·{6,5,4,3}",
                     _simple("SL4: L2 + L2", s4, ext2(s4), ext2(s4)), (6, 3), _p(s4, 6, 5, 4, 3)))
    out.append(_named("P^(1|3)(L2 + L3 of SL6) = {1^2}.({1^3}+{3^2,1^3}+...) ∋ 2·{2^2,1}",
                     _simple("SL6: L2 + L3", s6, ext2(s6), _p(s6, 1, 1, 1)), (1, 3), _p(s6, 2, 2, 1)))

    # type C
    c3, c2 = Sp(6), Sp(4)
    out.append(_named("P^(2|2) = <2>.(<0>+<1^2>) = 2·<2> + <2,1^2> + <1,1> + <3,1>",
                     _simple("Sp6: C + C", c3, std(c3), std(c3)), (2, 2), _p(c3, 2),
                     full={_p(c3, 2): 2, _p(c3, 2, 1, 1): 1, _p(c3, 1, 1): 1, _p(c3, 3, 1): 1}))
    out.append(_named("P^(2|3) = <2>.(<1^3>+<3,2>) ∋ 2·<3,2>",
                     _simple("Sp6: C + L3_0", c3, std(c3), (0, 0, 1)), (2, 3), _p(c3, 3, 2)))
    out.append(_named("P^(2|2) = (<0>+<2^2>).(<1^2>+<0>) ∋ 2·<1^2>",
                     _simple("Sp4: L2_0 + C", c2, (0, 1), std(c2)), (2, 2), _p(c2, 1, 1)))
    out.append(_named("P^(2|1) = (<0>+<2^2>).<1^2> = 2·<1^2> + <3^2> + <3,1>",
                     _simple("Sp4: L2_0 + L2_0", c2, (0, 1), (0, 1)), (2, 1), _p(c2, 1, 1),
                     full={_p(c2, 1, 1): 2, _p(c2, 3, 3): 1, _p(c2, 3, 1): 1}))

    # type B
    b2, b3, b4 = SO(5), SO(7), SO(9)
    out.append(_named("P^(2|2) = ([0]+[2]).[1^2] ∋ 2·[1^2]",
                     _simple("SO5: C + C", b2, std(b2), std(b2)), (2, 2), _p(b2, 1, 1)))
    out.append(_named("P^(2|2) = 2·[1^2] + [2,1^2] + [2] + [3,1]",
                     _simple("SO7: C + C", b3, std(b3), std(b3)), (2, 2), _p(b3, 1, 1),
                     full={_p(b3, 1, 1): 2, _p(b3, 2, 1, 1): 1, _p(b3, 2): 1, _p(b3, 3, 1): 1}))
    d7, d9 = spin_label(b3, "full"), spin_label(b4, "full")
    out.append(_named("P^(2|3) = ((2,0,0)+(0,0,0)).((0,0,1)+(1,0,1)) ∋ 2·(1,0,1)",
                     _simple("SO7: C + D7", b3, std(b3), d7), (2, 3), (1, 0, 1)))
    out.append(_named("P^(2|3) = ((2,0,0,0)+(0,0,0,0)).((0,1,0,1)+(1,0,0,1)) ∋ 2·(1,0,0,1)",
                     _simple("SO9: C + D9", b4, std(b4), d9), (2, 3), (1, 0, 0, 1)))
    out.append(_named("P^(3|2) = ((0,0,1)+(0,0,3)).(0,1,0) ∋ 2·(0,1,1)",
                     _simple("SO7: D7 + C", b3, d7, std(b3)), (3, 2), (0, 1, 1)))
    out.append(_named("P^(2|3) = ((0,0,2)+...).((1,0,1)+...) ∋ 2·(1,0,1)",
                     _simple("SO7: D7 + D7", b3, d7, d7), (2, 3), (1, 0, 1)))
    out.append(_named("P^(3|2) = ((0,0,0,1)+(0,0,0,3)).(0,1,0,0) ∋ 2·(0,1,0,1)",
                     _simple("SO9: D9 + C", b4, d9, std(b4)), (3, 2), (0, 1, 0, 1)))
    out.append(_named("P^(2|3) = ((0,0,0,2)+...).((1,0,0,1)+...) ∋ 2·(1,0,0,1)",
                     _simple("SO9: D9 + D9", b4, d9, d9), (2, 3), (1, 0, 0, 1)))

    # type D
    d4, d5, d6 = SO(8), SO(10), SO(12)
    out.append(_named("same decomposition as for SO(2n+1): 2·[1^2] + [2,1^2] + [2] + [3,1]",
                     _simple("SO8: C + C", d4, std(d4), std(d4)), (2, 2), (0, 1, 0, 0),
                     full={_p(d4, 1, 1): 2, _p(d4, 2, 1, 1): 1, _p(d4, 2): 1, _p(d4, 3, 1): 1}))
    p8, p10 = spin_label(d4, "plus"), spin_label(d5, "plus")
    out.append(_named("P^(3|4) = ((1,0,0,0)+(3,0,0,0)).((2,0,0,0)+...) ∋ 2·(1,0,0,0)",
                     _simple("SO8: C + D8+", d4, std(d4), p8), (3, 4), (1, 0, 0, 0)))
    out.append(_named("P^(2|5) = ((2,0,0,0,0)+...).((1,1,0,0,1)+...) ∋ 2·(1,1,0,0,1)",
                     _simple("SO10: C + D10+", d5, std(d5), p10), (2, 5), (1, 1, 0, 0, 1)))
    out.append(_named("P^(2|5) = ((2,0,0,0,0,0)+...).((0,1,1,0,0,1)+...) ∋ 2·(0,1,1,0,0,1)",
                     _simple("SO12: C + D12+", d6, std(d6), spin_label(d6, "plus")), (2, 5), (0, 1, 1, 0, 0, 1)))
    out.append(_named("P^(2|5) = ((2,0,0,0,0,0)+...).((0,1,1,0,1,0)+...) ∋ 2·(0,1,1,0,1,0)",
                     _simple("SO12: C + D12-", d6, std(d6), spin_label(d6, "minus")), (2, 5), (0, 1, 1, 0, 1, 0)))
    out.append(_named("P^(3|4) = ((0,0,1,0)+(0,0,3,0)).((0,0,2,0)+...) ∋ 2·(0,0,1,0)",
                     _simple("SO8: D8+ + C", d4, p8, std(d4)), (3, 4), (0, 0, 1, 0)))
    out.append(_named("D8+ + D8+ is equivalent to C^8 + C^8 (triality): 2·(0,1,0,0) at (2|2)",
                     _simple("SO8: D8+ + D8+", d4, p8, p8), (2, 2), (0, 1, 0, 0)))
    out.append(_named("P^(3|3) = ((1,0,0,1,0)+...).((0,0,1,0,0)+...) ∋ 2·(0,1,0,1,0)",
                     _simple("SO10: D10+ + C", d5, p10, std(d5)), (3, 3), (0, 1, 0, 1, 0)))
    out.append(_named("P^(3|2) = ((1,0,0,1,0)+...).(0,0,1,0,0) ∋ 2·(1,0,0,0,1)",
                     _simple("SO10: D10+ + D10+", d5, p10, p10), (3, 2), (1, 0, 0, 0, 1)))

    # exceptional
    out.append(_named("P^(1|2) = (1,0).((1,0)+(0,1)) ∋ 2·(1,0)",
                     _simple("G2: 7 + 7", G2, (1, 0), (1, 0)), (1, 2), (1, 0)))
    out.append(_named("P^(2|1) = ((0,0,0,0,0,1)+(2,0,0,0,0,0)).(1,0,0,0,0,0) ∋ 2·(1,0,0,0,0,1)",
                     _simple("E6: 27 + 27", E6, (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)), (2, 1), (1, 0, 0, 0, 0, 1)))
    return out


def _one_plus_two(name, left: GroupType, right: GroupType, even_on_left, odd_left, odd_right) -> RepDiagram:
    """Even module on ``left`` only, odd module on ``left x right``."""
    return diagram(name, [left, right], [("even", {0: even_on_left}), ("odd", {0: odd_left, 1: odd_right})])


def two_factor_cases() -> list[WitnessCase]:
    out = []
    for n, m in ((2, 2), (3, 2)):
        a, b = SL(n), SL(m)
        out.append(_case(f"S2SLn+SLnxSLm[n={n},m={m}]", "P^(5|2) ∋ 2·{8,4}⊗{1^2}",
                         _one_plus_two(f"SL{n}xSL{m}: S2 C^n + C^n C^m", a, b, sym2(a), std(a), std(b)),
                         (5, 2), _p(a, 8, 4), _p(b, 1, 1)))
    s2 = SL(2)
    for k in (2, 3):
        gk = SL(k)
        d = diagram(f"SL{k}xSL2: C^2 + C^{k} S2 C^2", [gk, s2],
                    [("even", {1: (1,)}), ("odd", {0: std(gk), 1: (2,)})])
        out.append(_case(f"SL2+SLkxS2SL2[k={k}]", "P^(2|3) ∋ 2·{3-k}⊗{4}", d, (2, 3), _p(gk, 3 - k), (4,)))
    s4 = SL(4)
    d = diagram("SL2xSL4: C^4 + C^2 L2 C^4", [s2, s4], [("even", {1: std(s4)}), ("odd", {0: (1,), 1: ext2(s4)})])
    out.append(_case("SL4+SL2xL2SL4", "P^(1|4) ∋ 2·{2}⊗{2^2,1}", d, (1, 4), (2,), _p(s4, 2, 2, 1)))
    c2 = Sp(4)
    for n in (2, 3):
        a = SL(n)
        out.append(_case(f"SLn+SLnxSp4[n={n}]", "P^(1|3) ∋ 2·{3,1}⊗<1>",
                         _one_plus_two(f"SL{n}xSp4: C^n + C^n C^4", a, c2, std(a), std(a), std(c2)),
                         (1, 3), _p(a, 3, 1), _p(c2, 1)))
    for n in (3, 4):
        so = SO(2 * n)
        out.append(_case(f"SL2+SL2xSO2n[n={n}]", f"P^(2|{n + 1}) ∋ 2·{{{n + 1}}}⊗[1^{n - 1}]",
                         _one_plus_two(f"SL2xSO{2 * n}: C^2 + C^2 C^{2 * n}", s2, so, (1,), (1,), std(so)),
                         (2, n + 1), (n + 1,), _p(so, *([1] * (n - 1)))))
    s3 = SL(3)
    for n in (2, 3):
        so = SO(2 * n + 1)
        out.append(_case(f"SL3+SL3xSO[2n+1={2 * n + 1}]", "P^(1|3) ∋ 2·{1}⊗[1]",
                         _one_plus_two(f"SL3xSO{2 * n + 1}: C^3 + C^3 C^{2 * n + 1}", s3, so, std(s3), std(s3), std(so)),
                         (1, 3), _p(s3, 1), _p(so, 1)))
    b2 = SO(5)
    d5 = spin_label(b2, "full")
    d = diagram("SL3xSO5: D5 + C^3 C^5", [s3, b2], [("even", {1: d5}), ("odd", {0: std(s3), 1: std(b2)})])
    out.append(_case("D5+SL3xSO5", "P^(2|3) ∋ 2·{0}⊗(1,2)", d, (2, 3), (0, 0), (1, 2)))
    d = diagram("SL2xSO5: D5 + C^2 C^5", [s2, b2], [("even", {1: d5}), ("odd", {0: (1,), 1: std(b2)})])
    out.append(_case("D5+SL2xSO5", "P^(2|3) ∋ 2·{1}⊗(0,2)", d, (2, 3), (1,), (0, 2)))

    # the two-factor module is even, the one-factor module odd
    for n, m in ((2, 4), (3, 4)):
        a, b = SL(n), SL(m)
        d = diagram(f"SL{n}xSL{m}: C^n C^m + L2 C^m", [a, b], [("even", {0: std(a), 1: std(b)}), ("odd", {1: ext2(b)})])
        out.append(_case(f"SLnxSLm+L2SLm[n={n},m={m}]", "P^(3|2) ∋ 2·{2,1}⊗{3,2,1^2}", d, (3, 2), _p(a, 2, 1), _p(b, 3, 2, 1, 1)))
    for n, m in ((4, 2), (3, 3)):
        a, c = SL(n), Sp(2 * m)
        d = diagram(f"SL{n}xSp{2 * m}: C^n C^{2 * m} + C^n", [a, c], [("even", {0: std(a), 1: std(c)}), ("odd", {0: std(a)})])
        out.append(_case(f"SLnxSp2m+SLn[n={n},m={m}]", "P^(3|1) ∋ 2·{2,1^2}⊗<1>", d, (3, 1), _p(a, 2, 1, 1), _p(c, 1),
                         printed=(_p(a, 2, 1), _p(c, 1))))
    for n in (2, 3):
        a = SL(n)
        d = diagram(f"SL{n}xSp4: C^n C^4 + L2_0", [a, c2], [("even", {0: std(a), 1: std(c2)}), ("odd", {1: (0, 1)})])
        # Lambda^2 of the 5-dimensional module is <2>; {2,1}.(<2,1> + <1>).<2> repeats <1>
        out.append(_case(f"SLnxSp4+L2_0[n={n}]", "P^(3|2) = S^3(C^n C^4).<2> ∋ 2·{2,1}⊗<1>", d, (3, 2), _p(a, 2, 1), _p(c2, 1),
                         printed=(_p(a, 2, 1), _p(c2, 1, 1))))
    return out
