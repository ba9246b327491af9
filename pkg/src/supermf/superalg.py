"""Representation diagrams and the super multiplicity-free test.

A diagram is a list of simple factors and a list of irreducible submodules.
Each submodule is even or odd and carries one highest weight per factor (the
zero weight where the factor acts trivially).  The graded component of
multidegree ``idx`` is

    S^{i_1} U_1 (x) ... (x) Lambda^{j_1} W_1 (x) ...

and the space is super MF when every such component is multiplicity free
as a representation of the product of the factors.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb, prod

from . import charengine as ce
from .charengine import FormalChar
from .formulas import fast_path
from .rootdata import GroupType, ProductGroup, Weight, dimension, dual_weight, validate_weight

EVEN, ODD = "even", "odd"


@dataclass(frozen=True)
class Submodule:
    parity: str
    weights: tuple[Weight, ...]
    dual_mark: bool = False
    name: str = ""

    def __post_init__(self):
        if self.parity not in (EVEN, ODD):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        object.__setattr__(self, "weights", tuple(tuple(int(x) for x in w) for w in self.weights))


@dataclass(frozen=True)
class RepDiagram:
    factors: tuple[GroupType, ...]
    submodules: tuple[Submodule, ...]
    name: str = "diagram"
    factor_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "submodules", tuple(self.submodules))
        if not self.factor_names:
            object.__setattr__(self, "factor_names", tuple(f"G{i + 1}" for i in range(len(self.factors))))
        else:
            object.__setattr__(self, "factor_names", tuple(self.factor_names))
        if not self.factors:
            raise ValueError("at least one factor required")
        if not self.submodules:
            raise ValueError("at least one submodule required")
        if len(self.factor_names) != len(self.factors):
            raise ValueError("one name per factor required")
        if len(set(self.factor_names)) != len(self.factor_names):
            raise ValueError("factor names must be distinct")
        subs = []
        for k, s in enumerate(self.submodules):
            if len(s.weights) != len(self.factors):
                raise ValueError(f"submodule {k} has {len(s.weights)} weights for {len(self.factors)} factors")
            for f, w in zip(self.factors, s.weights):
                validate_weight(f, w)
            if not any(any(w) for w in s.weights):
                raise ValueError(f"submodule {k} is trivial on every factor")
            if not s.name:
                s = replace(s, name=_default_name(self.submodules, k))
            subs.append(s)
        object.__setattr__(self, "submodules", tuple(subs))

    @property
    def group(self) -> ProductGroup:
        return ProductGroup(self.factors)

    def effective_weights(self, k: int) -> tuple[Weight, ...]:
        """Weights of submodule ``k`` after applying its dual mark."""
        s = self.submodules[k]
        if not s.dual_mark:
            return s.weights
        return tuple(dual_weight(f, w) for f, w in zip(self.factors, s.weights))

    def support(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.submodules[k].weights) if any(w))

    def submodule_dimension(self, k: int) -> int:
        return prod(dimension(f, w) for f, w in zip(self.factors, self.submodules[k].weights))

    def is_connected(self) -> bool:
        return len(_components(self)) == 1


def _default_name(subs, k: int) -> str:
    parity = subs[k].parity
    idx = sum(1 for s in subs[: k + 1] if s.parity == parity)
    return f"{'U' if parity == EVEN else 'W'}{idx}"


@dataclass(frozen=True)
class MultiIndex:
    """One degree per submodule, in diagram order."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        if any(x < 0 for x in self.degrees):
            raise ValueError("degrees must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def format(self, d: RepDiagram) -> str:
        ev = [str(x) for x, s in zip(self.degrees, d.submodules) if s.parity == EVEN]
        od = [str(x) for x, s in zip(self.degrees, d.submodules) if s.parity == ODD]
        return "(" + ",".join(ev) + "|" + ",".join(od) + ")"


@dataclass(frozen=True)
class Witness:
    multiindex: MultiIndex
    label: tuple[Weight, ...]
    multiplicity: int


@dataclass(frozen=True)
class MFVerdict:
    status: str
    bound: int
    witness: Witness | None = None
    components_checked: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.status not in ("mf_up_to_bound", "not_mf"):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.witness is None) != (self.status == "mf_up_to_bound"):
            raise ValueError("a witness is required exactly for not_mf")
        if self.witness is not None and self.witness.multiplicity < 2:
            raise ValueError("witness multiplicity must be at least 2")

    @property
    def is_mf(self) -> bool:
        return self.status == "mf_up_to_bound"


# ---------------------------------------------------------------------------
# graded components


def _piece_power(factors: tuple[GroupType, ...], weights: tuple[Weight, ...], kind: str, degree: int) -> FormalChar:
    """Power of one irreducible of the sub-product ``factors``."""
    sub = factors[0] if len(factors) == 1 else ProductGroup(factors)
    label = weights[0] if len(factors) == 1 else weights
    fc = fast_path(sub, label, kind, degree)
    if fc is not None:
        return fc
    rep = FormalChar.irreducible(sub, label)
    if kind == "sym":
        return ce.sym_power(sub, rep, degree)
    return ce.ext_power(sub, rep, degree)


@lru_cache(maxsize=4096)
def _embedded_power(factors: tuple[GroupType, ...], weights: tuple[Weight, ...], kind: str, degree: int) -> FormalChar:
    group = ProductGroup(factors)
    if degree == 0:
        return FormalChar.trivial(group)
    supp = tuple(i for i, w in enumerate(weights) if any(w))
    piece = _piece_power(tuple(factors[i] for i in supp), tuple(weights[i] for i in supp), kind, degree)
    zero = tuple((0,) * f.rank for f in factors)
    terms = {}
    for lab, m in piece.items():
        parts = (lab,) if len(supp) == 1 else lab
        full = list(zero)
        for i, w in zip(supp, parts):
            full[i] = w
        terms[tuple(full)] = m
    return FormalChar(group, terms)


def _key(d: RepDiagram) -> tuple:
    return d.factors, tuple((s.parity, d.effective_weights(k)) for k, s in enumerate(d.submodules))


@lru_cache(maxsize=65536)
def _component(key: tuple, degrees: tuple[int, ...]) -> FormalChar:
    factors, subs = key
    if not degrees:
        return FormalChar.trivial(ProductGroup(factors))
    head = _component((factors, subs[:-1]), degrees[:-1])
    parity, weights = subs[-1]
    kind = "sym" if parity == EVEN else "ext"
    if degrees[-1] == 0:
        return head
    power = _embedded_power(factors, weights, kind, degrees[-1])
    if not power.terms or not head.terms:
        return FormalChar(ProductGroup(factors), {})
    return head * power


def expected_dimension(d: RepDiagram, idx: MultiIndex) -> int:
    out = 1
    for k, (s, deg) in enumerate(zip(d.submodules, idx.degrees)):
        dim = d.submodule_dimension(k)
        out *= comb(dim + deg - 1, deg) if s.parity == EVEN else comb(dim, deg)
    return out


def graded_component(d: RepDiagram, idx: MultiIndex | tuple[int, ...]) -> FormalChar:
    """Decomposition of the component of multidegree ``idx``."""
    if not isinstance(idx, MultiIndex):
        idx = MultiIndex(tuple(idx))
    if len(idx.degrees) != len(d.submodules):
        raise ValueError(f"multi-index has {len(idx.degrees)} entries for {len(d.submodules)} submodules")
    fc = _component(_key(d), idx.degrees)
    ce.check_dimension(fc, expected_dimension(d, idx))
    return fc


def multi_indices(d: RepDiagram, max_total_degree: int):
    """All admissible multi-indices with total degree <= bound, in lexicographic order."""
    caps = []
    for k, s in enumerate(d.submodules):
        caps.append(min(max_total_degree, d.submodule_dimension(k)) if s.parity == ODD else max_total_degree)

    def rec(i, left):
        if i == len(caps):
            yield ()
            return
        for x in range(min(caps[i], left) + 1):
            for rest in rec(i + 1, left - x):
                yield (x,) + rest

    for t in rec(0, max_total_degree):
        yield MultiIndex(t)


def select_witness(fc: FormalChar):
    """Lexicographically smallest label with multiplicity >= 2, or None."""
    rep = fc.repeated()
    if not rep:
        return None
    label = min(rep)
    return label, rep[label]


def is_super_mf(d: RepDiagram, max_total_degree: int, jobs: int = 1) -> MFVerdict:
    """Check every component of total degree <= bound.

    Sequentially this stops at the first repeated label.  With ``jobs > 1``
    all components are computed concurrently and the lexicographically first
    witness is selected afterwards, so the verdict does not depend on
    completion order.
    """
    if max_total_degree < 1:
        raise ValueError("max_total_degree must be >= 1")
    indices = list(multi_indices(d, max_total_degree))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            comps = list(pool.map(lambda idx: graded_component(d, idx), indices))
    else:
        comps = (graded_component(d, idx) for idx in indices)
    checked = 0
    for idx, fc in zip(indices, comps):
        checked += 1
        w = select_witness(fc)
        if w is not None:
            return MFVerdict("not_mf", max_total_degree, Witness(idx, w[0], w[1]), checked)
    return MFVerdict("mf_up_to_bound", max_total_degree, None, checked)


def clear_caches() -> None:
    _component.cache_clear()
    _embedded_power.cache_clear()


# ---------------------------------------------------------------------------
# diagram operations


def dual_flip(d: RepDiagram, index: int) -> RepDiagram:
    if not 0 <= index < len(d.submodules):
        raise IndexError(f"submodule index {index} out of range")
    subs = list(d.submodules)
    subs[index] = replace(subs[index], dual_mark=not subs[index].dual_mark)
    return replace(d, submodules=tuple(subs))


def _components(d: RepDiagram) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components as (factor indices, submodule indices)."""
    parent = list(range(len(d.factors)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(len(d.submodules)):
        supp = d.support(k)
        for i in supp[1:]:
            parent[find(i)] = find(supp[0])
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for k in range(len(d.submodules)):
        root = find(d.support(k)[0])
        groups.setdefault(root, ([], []))[1].append(k)
    for i in range(len(d.factors)):
        if find(i) in groups:
            groups[find(i)][0].append(i)
    out = [(tuple(f), tuple(s)) for f, s in groups.values()]
    return sorted(out)


def restrict(d: RepDiagram, factor_idx, sub_idx) -> RepDiagram | None:
    """Keep the given factors and submodules; drop trivial submodules and idle factors."""
    keep_f = sorted(set(factor_idx))
    subs = []
    for k in sorted(set(sub_idx)):
        s = d.submodules[k]
        ws = tuple(s.weights[i] for i in keep_f)
        if any(any(w) for w in ws):
            subs.append(replace(s, weights=ws))
    if not subs:
        return None
    used = [j for j in range(len(keep_f)) if any(any(s.weights[j]) for s in subs)]
    return RepDiagram(
        tuple(d.factors[keep_f[j]] for j in used),
        tuple(replace(s, weights=tuple(s.weights[j] for j in used)) for s in subs),
        d.name,
        tuple(d.factor_names[keep_f[j]] for j in used),
    )


def split_components(d: RepDiagram) -> list[RepDiagram]:
    return [restrict(d, f, s) for f, s in _components(d)]


def subdiagrams(d: RepDiagram) -> list[RepDiagram]:
    """``d`` itself followed by every connected diagram obtained by deleting vertices."""
    seen = {d}
    out = [d]
    nf, ns = len(d.factors), len(d.submodules)
    for fmask in range(2**nf - 1, 0, -1):
        fs = [i for i in range(nf) if fmask >> i & 1]
        for smask in range(2**ns - 1, 0, -1):
            ss = [k for k in range(ns) if smask >> k & 1]
            r = restrict(d, fs, ss)
            if r is None:
                continue
            for c in split_components(r):
                if c not in seen:
                    seen.add(c)
                    out.append(c)
    return out


def make_diagram(factors, submodules, name: str = "diagram") -> RepDiagram:
    """Build a diagram from ``(parity, weights)`` or ``(parity, weights, dual_mark)`` tuples."""
    subs = []
    for s in submodules:
        if isinstance(s, Submodule):
            subs.append(s)
        else:
            subs.append(Submodule(s[0], tuple(s[1]), bool(s[2]) if len(s) > 2 else False))
    return RepDiagram(tuple(factors), tuple(subs), name)


__all__ = [
    "EVEN",
    "ODD",
    "MFVerdict",
    "MultiIndex",
    "RepDiagram",
    "Submodule",
    "Witness",
    "dual_flip",
    "graded_component",
    "is_super_mf",
    "make_diagram",
    "split_components",
    "subdiagrams",
]
