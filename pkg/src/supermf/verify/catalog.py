"""Diagrams used by the verification suites.

Builders take ranks as arguments and return ``RepDiagram`` values.  A
submodule is given as ``(parity, {factor_index: weight})``; factors not
listed act trivially.
"""

from __future__ import annotations

from ..rootdata import SL, SO, Sp, GroupType, fundamental, partition_to_weight, spin_label, standard_weight
from ..superalg import RepDiagram, Submodule


def diagram(name: str, factors: list[GroupType], subs) -> RepDiagram:
    out = []
    for parity, ws in subs:
        weights = tuple(ws.get(i, (0,) * f.rank) for i, f in enumerate(factors))
        out.append(Submodule(parity, weights))
    return RepDiagram(tuple(factors), tuple(out), name)


def std(g: GroupType):
    return standard_weight(g)


def part(g: GroupType, *lam: int):
    return partition_to_weight(g, lam)


def sym2(g: GroupType):
    return part(g, 2)


def ext2(g: GroupType):
    return fundamental(g, 2)


# ---------------------------------------------------------------------------
# proper super spaces: even part and odd part both nonzero


def positive_a(n: int) -> list[RepDiagram]:
    out = [
        diagram(f"SL{n}: C^n + C^n", [SL(n)], [("even", {0: std(SL(n))}), ("odd", {0: std(SL(n))})]),
        diagram(f"SL{n}: S2 C^n + C^n", [SL(n)], [("even", {0: sym2(SL(n))}), ("odd", {0: std(SL(n))})]),
    ]
    return out


def positive_a_fixed() -> list[RepDiagram]:
    return [
        diagram("SL2: C^2 + S2 C^2", [SL(2)], [("even", {0: (1,)}), ("odd", {0: (2,)})]),
        diagram("SL4: C^4 + L2 C^4", [SL(4)], [("even", {0: std(SL(4))}), ("odd", {0: ext2(SL(4))})]),
        diagram("Sp4: C^4 + L2_0 C^4", [Sp(4)], [("even", {0: (1, 0)}), ("odd", {0: (0, 1)})]),
    ]


def positive_b(n: int, m: int) -> list[RepDiagram]:
    a, b = SL(n), SL(m)
    return [
        diagram(f"SL{n}xSL{m}: C^n + C^n C^m", [a, b], [("even", {0: std(a)}), ("odd", {0: std(a), 1: std(b)})]),
        diagram(f"SL{n}xSL{m}: C^n C^m + C^m", [a, b], [("even", {0: std(a), 1: std(b)}), ("odd", {1: std(b)})]),
    ]


def positive_b_one(n: int) -> list[RepDiagram]:
    s2, so, sp, sl = SL(2), SO(2 * n + 1), Sp(2 * n), SL(n)
    return [
        diagram(f"SL2xSO{2 * n + 1}: C^2 + C^2 C^{2 * n + 1}", [s2, so], [("even", {0: (1,)}), ("odd", {0: (1,), 1: std(so)})]),
        diagram(f"SL2xSL{n}: C^2 C^n + S2 C^2", [s2, sl], [("even", {0: (1,), 1: std(sl)}), ("odd", {0: (2,)})]),
        diagram(f"SL2xSp{2 * n}: C^2 C^{2 * n} + C^2", [s2, sp], [("even", {0: (1,), 1: std(sp)}), ("odd", {0: (1,)})]),
        diagram(f"SL2xSp{2 * n}: C^2 C^{2 * n} + S2 C^2", [s2, sp], [("even", {0: (1,), 1: std(sp)}), ("odd", {0: (2,)})]),
    ]


def chain(name: str, left: GroupType, right: GroupType, mid: GroupType | None = None) -> RepDiagram:
    """Even ``left (x) mid`` and odd ``mid (x) right``; ``mid`` defaults to SL_2."""
    mid = mid or SL(2)
    return diagram(
        name,
        [left, mid, right],
        [("even", {0: std(left), 1: std(mid)}), ("odd", {1: std(mid), 2: std(right)})],
    )


def positive_c(n: int, m: int) -> list[RepDiagram]:
    return [
        chain(f"SL{n}xSL2xSL{m}: C^n C^2 + C^2 C^m", SL(n), SL(m)),
        chain(f"Sp{2 * n}xSL2xSL{m}: C^{2 * n} C^2 + C^2 C^m", Sp(2 * n), SL(m)),
        chain(f"SL{n}xSL2xSO{2 * m + 1}: C^n C^2 + C^2 C^{2 * m + 1}", SL(n), SO(2 * m + 1)),
        chain(f"Sp{2 * n}xSL2xSO{2 * m + 1}: C^{2 * n} C^2 + C^2 C^{2 * m + 1}", Sp(2 * n), SO(2 * m + 1)),
    ]


def theorem_positives(ranks=(2, 3, 4)) -> list[RepDiagram]:
    out = []
    for n in ranks:
        out += positive_a(n)
    out += positive_a_fixed()
    for n in ranks:
        for m in ranks:
            out += positive_b(n, m)
    for n in ranks:
        out += positive_b_one(n)
    for n in ranks:
        for m in ranks:
            out += positive_c(n, m)
    return out


# ---------------------------------------------------------------------------
# purely even / purely odd reducible spaces


def _pair(name, factors, parity, first, second) -> RepDiagram:
    return diagram(name, factors, [(parity, first), (parity, second)])


def symmetric_reducible() -> list[RepDiagram]:
    s2, s3 = SL(2), SL(3)
    sp4, d4 = Sp(4), SO(8)
    return [
        _pair("SL3: C^3 + C^3", [s3], "even", {0: std(s3)}, {0: std(s3)}),
        _pair("SL4: C^4 + L2 C^4", [SL(4)], "even", {0: std(SL(4))}, {0: ext2(SL(4))}),
        _pair("Sp4: C^4 + C^4", [sp4], "even", {0: std(sp4)}, {0: std(sp4)}),
        _pair("Spin8: C^8 + D8+", [d4], "even", {0: std(d4)}, {0: spin_label(d4, "plus")}),
        _pair("SL3xSL2: C^3 + C^3 C^2", [s3, s2], "even", {0: std(s3)}, {0: std(s3), 1: (1,)}),
        _pair("SL2xSp4: C^2 + C^2 C^4", [s2, sp4], "even", {0: (1,)}, {0: (1,), 1: std(sp4)}),
        _pair("SL2xSL2xSL2: C^2 C^2 + C^2 C^2", [s2, s2, s2], "even", {0: (1,), 1: (1,)}, {1: (1,), 2: (1,)}),
        _pair("SL2xSL2xSp4: C^2 C^2 + C^2 C^4", [s2, s2, sp4], "even", {0: (1,), 1: (1,)}, {1: (1,), 2: std(sp4)}),
        _pair("Sp4xSL2xSp4: C^4 C^2 + C^2 C^4", [sp4, s2, sp4], "even", {0: std(sp4), 1: (1,)}, {1: (1,), 2: std(sp4)}),
    ]


def skew_reducible() -> list[RepDiagram]:
    s2, s3, so5 = SL(2), SL(3), SO(5)
    out = [
        _pair("SL3: C^3 + C^3", [s3], "odd", {0: std(s3)}, {0: std(s3)}),
        _pair("SL3: C^3 + S2 C^3", [s3], "odd", {0: std(s3)}, {0: sym2(s3)}),
    ]
    for l in (2, 3, 4):
        out.append(_pair(f"SL2: C^2 + S{l} C^2", [s2], "odd", {0: (1,)}, {0: (l,)}))
    out += [
        _pair("SO5: C^5 + C^5", [so5], "odd", {0: std(so5)}, {0: std(so5)}),
        _pair("SL3xSL2: C^3 + C^3 C^2", [s3, s2], "odd", {0: std(s3)}, {0: std(s3), 1: (1,)}),
        _pair("SL2xSL3: S2 C^2 + C^2 C^3", [s2, s3], "odd", {0: (2,)}, {0: (1,), 1: std(s3)}),
        _pair("SL2xSO5: C^2 + C^2 C^5", [s2, so5], "odd", {0: (1,)}, {0: (1,), 1: std(so5)}),
        _pair("SL2xSO5: S2 C^2 + C^2 C^5", [s2, so5], "odd", {0: (2,)}, {0: (1,), 1: std(so5)}),
        _pair("SL2xSL2xSL2: C^2 C^2 + C^2 C^2", [s2, s2, s2], "odd", {0: (1,), 1: (1,)}, {1: (1,), 2: (1,)}),
        _pair("SL2xSL2xSO5: C^2 C^2 + C^2 C^5", [s2, s2, so5], "odd", {0: (1,), 1: (1,)}, {1: (1,), 2: std(so5)}),
        _pair("SO5xSL2xSO5: C^5 C^2 + C^2 C^5", [so5, s2, so5], "odd", {0: std(so5), 1: (1,)}, {1: (1,), 2: std(so5)}),
    ]
    return out
