"""Brute-force character engine.

Characters are finite maps from integer weights (fundamental-weight
coordinates) to multiplicities.  For a product group a weight is the
concatenation of the per-factor coordinates.  Irreducible characters come
from the Freudenthal recursion, symmetric and exterior powers from the
Newton recursions over Adams operations, and every result is decomposed by
stripping highest weights.  Nothing here uses Littlewood-Richardson
combinatorics, so the module serves as an independent check on ``lr``,
``universal`` and ``formulas``.

All arithmetic is on Python integers, which cannot overflow.
"""

from __future__ import annotations

import logging
import threading
import warnings
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

from .partitions import Partition, partition
from .rootdata import (
    GroupType,
    ProductGroup,
    Weight,
    as_factors,
    dimension,
    root_data,
    to_dominant,
    total_dimension,
    validate_weight,
)

log = logging.getLogger(__name__)

ENGINE_VERSION = "1"

Group = GroupType | ProductGroup


class NotACharacterError(ValueError):
    """Raised when highest-weight stripping leaves a negative remainder."""


class DimensionMismatchError(AssertionError):
    """Raised when sum(mult * dim) of a decomposition disagrees with its source."""


# ---------------------------------------------------------------------------
# value types


def _normalize_label(g: Group, label):
    if isinstance(g, ProductGroup):
        if len(label) != len(g.factors):
            raise ValueError(f"label {label} has {len(label)} parts, group {g} has {len(g.factors)} factors")
        return tuple(validate_weight(f, w) for f, w in zip(g.factors, label))
    return validate_weight(g, label)


@dataclass(frozen=True)
class FormalChar:
    """Decomposition of a representation: irreducible label -> multiplicity."""

    group: Group
    terms: Mapping

    def __post_init__(self):
        clean = {}
        for label, m in dict(self.terms).items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {label}")
            if m:
                label = _normalize_label(self.group, label)
                clean[label] = clean.get(label, 0) + m
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    @classmethod
    def irreducible(cls, group: Group, label) -> "FormalChar":
        return cls(group, {label: 1})

    @classmethod
    def trivial(cls, group: Group) -> "FormalChar":
        return cls(group, {_zero_label(group): 1})

    def __getitem__(self, label) -> int:
        return self.terms.get(_normalize_label(self.group, label), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def __add__(self, other: "FormalChar") -> "FormalChar":
        _same_group(self.group, other.group)
        c = Counter(self.terms)
        c.update(other.terms)
        return FormalChar(self.group, c)

    def __mul__(self, other: "FormalChar") -> "FormalChar":
        return multiply(self, other)

    def scaled(self, k: int) -> "FormalChar":
        return FormalChar(self.group, {lab: m * k for lab, m in self.terms.items()})

    def dimension(self) -> int:
        return sum(m * total_dimension(self.group, lab) for lab, m in self.terms.items())

    def repeated(self) -> dict:
        return {lab: m for lab, m in self.terms.items() if m >= 2}

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.terms.values())


def _zero_label(g: Group):
    if isinstance(g, ProductGroup):
        return tuple((0,) * f.rank for f in g.factors)
    return (0,) * g.rank


def _same_group(a: Group, b: Group) -> None:
    if a != b:
        raise ValueError(f"group mismatch: {a} vs {b}")


@dataclass(frozen=True)
class WeightMultiset:
    """Full weight system: weight -> multiplicity (flat coordinates for products)."""

    group: Group
    entries: Mapping[Weight, int]

    def __post_init__(self):
        object.__setattr__(self, "entries", {w: m for w, m in dict(self.entries).items() if m})

    def total(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, w) -> int:
        return self.entries.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        return self.entries.items()


# ---------------------------------------------------------------------------
# flat-coordinate helpers for product groups


def _flatten(g: Group, label) -> Weight:
    if isinstance(g, ProductGroup):
        return tuple(x for w in label for x in w)
    return tuple(label)


def _unflatten(g: Group, flat: Weight):
    if isinstance(g, ProductGroup):
        return g.split(flat)
    return tuple(flat)


@lru_cache(maxsize=None)
def _height_vector(g: Group) -> tuple[int, ...]:
    return tuple(h for f in as_factors(g) for h in root_data(f).height_vector)


def _height(g: Group, flat: Weight) -> int:
    return sum(x * h for x, h in zip(flat, _height_vector(g)))


# weights are packed into single integers so that vector addition becomes
# integer addition; coordinates must stay below _BASE // 2 in absolute value
_BASE = 1 << 24
_HALF = _BASE >> 1


def _pack(w: Weight) -> int:
    x = 0
    for c in reversed(w):
        x = x * _BASE + c
    return x


def _unpack(x: int, r: int) -> Weight:
    out = []
    for _ in range(r):
        c = x % _BASE
        if c >= _HALF:
            c -= _BASE
        out.append(c)
        x = (x - c) // _BASE
    return tuple(out)


def _pack_dict(d: Mapping[Weight, int]) -> dict[int, int]:
    return {_pack(w): m for w, m in d.items()}


def _unpack_dict(d: Mapping[int, int], r: int) -> dict[Weight, int]:
    return {_unpack(x, r): m for x, m in d.items() if m}


def _convolve_packed(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    if len(a) < len(b):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    for y, my in b.items():
        for x, mx in a.items():
            k = x + y
            out[k] = get(k, 0) + mx * my
    return out


# ---------------------------------------------------------------------------
# irreducible characters


@lru_cache(maxsize=None)
def dominant_character(g: GroupType, w: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(w) via the Freudenthal recursion."""
    w = validate_weight(g, w)
    rd = root_data(g)
    roots = rd.positive_roots
    pairings = rd.root_pairings
    n = g.rank

    dom = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in dom:
                    dom.add(nu)
                    nxt.append(nu)
        frontier = nxt
    order = sorted(dom, key=lambda mu: (rd.height(mu), mu), reverse=True)

    def norm_rho(mu):
        s = tuple(x + 1 for x in mu)
        return rd.inner(s, s)

    top = norm_rho(w)
    mult: dict[Weight, int] = {w: 1}
    for mu in order[1:]:
        total = 0
        for a, pair in zip(roots, pairings):
            nu = tuple(x + y for x, y in zip(mu, a))
            while True:
                d = to_dominant(g, nu)
                m = mult.get(d)
                if not m:
                    break
                total += m * sum(nu[i] * pair[i] for i in range(n))
                nu = tuple(x + y for x, y in zip(nu, a))
        denom = top - norm_rho(mu)
        num = 2 * total
        if denom <= 0 or num % denom:
            raise ArithmeticError(f"Freudenthal recursion failed at {mu} in V{w} of {g}")
        if num:
            mult[mu] = num // denom
    return mult


@lru_cache(maxsize=None)
def weyl_orbit(g: GroupType, w: Weight) -> frozenset[Weight]:
    seen = {tuple(w)}
    frontier = [tuple(w)]
    cartan = root_data(g).cartan
    while frontier:
        nxt = []
        for mu in frontier:
            for i, c in enumerate(mu):
                if c:
                    nu = tuple(x - c * r for x, r in zip(mu, cartan[i]))
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def _full_character(g: GroupType, w: Weight) -> dict[Weight, int]:
    out = {}
    for mu, m in dominant_character(g, w).items():
        for nu in weyl_orbit(g, mu):
            out[nu] = m
    return out


def weight_multiplicities(g: Group, w) -> WeightMultiset:
    """Full weight system of the irreducible with highest weight ``w``."""
    label = _normalize_label(g, w)
    return WeightMultiset(g, _label_character(g, label))


def _label_character(g: Group, label) -> dict[Weight, int]:
    if isinstance(g, ProductGroup):
        out: dict[Weight, int] = {(): 1}
        for f, w in zip(g.factors, label):
            part = _full_character(f, w)
            out = {a + b: ma * mb for a, ma in out.items() for b, mb in part.items()}
        return out
    return dict(_full_character(g, label))


def _label_dominant_character(g: Group, label) -> dict[Weight, int]:
    if isinstance(g, ProductGroup):
        out: dict[Weight, int] = {(): 1}
        for f, w in zip(g.factors, label):
            part = dominant_character(f, w)
            out = {a + b: ma * mb for a, ma in out.items() for b, mb in part.items()}
        return out
    return dominant_character(g, label)


def character_of(fc: FormalChar) -> WeightMultiset:
    """Full weight multiset of a formal character."""
    out: Counter = Counter()
    for label, m in fc.items():
        for w, k in _label_character(fc.group, label).items():
            out[w] += m * k
    return WeightMultiset(fc.group, out)


# ---------------------------------------------------------------------------
# decomposition


def decompose(ws: WeightMultiset) -> FormalChar:
    """Write a weight multiset as a sum of irreducible characters.

    Dominant weights are stripped in decreasing (height, lexicographic)
    order; height is a positive functional on the positive roots, so each
    stripped weight is maximal among those remaining.
    """
    g = ws.group
    rem = {w: m for w, m in ws.items() if min(w, default=0) >= 0}
    order = sorted(rem, key=lambda w: (_height(g, w), w), reverse=True)
    terms = {}
    for w in order:
        r = rem.get(w, 0)
        if r < 0:
            raise NotACharacterError(f"not a true character: remainder {r} at {w}")
        if r == 0:
            continue
        label = _unflatten(g, w)
        terms[label] = r
        for u, k in _label_dominant_character(g, label).items():
            rem[u] = rem.get(u, 0) - r * k
    bad = {w: m for w, m in rem.items() if m}
    if bad:
        w, m = next(iter(sorted(bad.items())))
        raise NotACharacterError(f"not a true character: remainder {m} at {w}")
    fc = FormalChar(g, terms)
    check_dimension(fc, ws.total())
    return fc


_checks_lock = threading.Lock()
dimension_checks = Counter()


def check_dimension(fc: FormalChar, expected: int) -> None:
    """Dimension bookkeeping; every decomposition passes through here."""
    got = fc.dimension()
    with _checks_lock:
        dimension_checks["performed"] += 1
        if got != expected:
            dimension_checks["violations"] += 1
    if got != expected:
        raise DimensionMismatchError(f"sum of mult*dim is {got}, expected {expected}")


# ---------------------------------------------------------------------------
# operations


def adams(ws: WeightMultiset, k: int) -> WeightMultiset:
    if k < 1:
        raise ValueError("Adams operation needs k >= 1")
    return WeightMultiset(ws.group, {tuple(k * x for x in w): m for w, m in ws.items()})


def tensor(g: Group, w1, w2, method: str = "klimyk") -> FormalChar:
    """Decompose V(w1) (x) V(w2).

    ``method="convolve"`` multiplies full weight multisets and strips;
    ``method="klimyk"`` uses the Brauer-Klimyk rule per simple factor.
    Both are weight-theoretic and agree (tested).
    """
    l1, l2 = _normalize_label(g, w1), _normalize_label(g, w2)
    if method == "convolve":
        a = _pack_dict(_label_character(g, l1))
        b = _pack_dict(_label_character(g, l2))
        prod_ = _unpack_dict(_convolve_packed(a, b), _flat_rank(g))
        return decompose(WeightMultiset(g, prod_))
    if method != "klimyk":
        raise ValueError(f"unknown tensor method {method!r}")
    if isinstance(g, ProductGroup):
        parts = [_klimyk(f, a, b) for f, a, b in zip(g.factors, l1, l2)]
        return FormalChar(g, _outer(parts))
    return FormalChar(g, _klimyk(g, l1, l2))


def _flat_rank(g: Group) -> int:
    return sum(f.rank for f in as_factors(g))


def _outer(parts: list[Mapping]) -> dict:
    out: dict = {(): 1}
    for p in parts:
        out = {a + (lab,): m * k for a, m in out.items() for lab, k in p.items()}
    return out


@lru_cache(maxsize=None)
def _klimyk_cached(g: GroupType, a: Weight, b: Weight) -> tuple[tuple[Weight, int], ...]:
    if dimension(g, b) > dimension(g, a):
        a, b = b, a
    cartan = root_data(g).cartan
    n = g.rank
    out: Counter = Counter()
    for nu, m in _full_character(g, b).items():
        x = [a[i] + nu[i] + 1 for i in range(n)]
        sign = 1
        while True:
            for i in range(n):
                if x[i] < 0:
                    c = x[i]
                    row = cartan[i]
                    for j in range(n):
                        x[j] -= c * row[j]
                    sign = -sign
                    break
            else:
                break
        if 0 in x:
            continue
        out[tuple(v - 1 for v in x)] += sign * m
    if any(v < 0 for v in out.values()):
        raise NotACharacterError("Brauer-Klimyk produced a negative multiplicity")
    result = tuple(sorted((lab, m) for lab, m in out.items() if m))
    expected = dimension(g, a) * dimension(g, b)
    got = sum(m * dimension(g, lab) for lab, m in result)
    with _checks_lock:
        dimension_checks["performed"] += 1
        if got != expected:
            dimension_checks["violations"] += 1
    if got != expected:
        raise DimensionMismatchError(f"tensor {a} x {b} of {g}: {got} != {expected}")
    return result


def _klimyk(g: GroupType, a: Weight, b: Weight) -> dict[Weight, int]:
    key = (a, b) if a <= b else (b, a)
    return dict(_klimyk_cached(g, *key))


def multiply(x: FormalChar, y: FormalChar) -> FormalChar:
    """Tensor product of two formal characters of the same group."""
    _same_group(x.group, y.group)
    g = x.group
    out: Counter = Counter()
    if isinstance(g, ProductGroup):
        for la, ma in x.items():
            for lb, mb in y.items():
                parts = [_klimyk(f, a, b) for f, a, b in zip(g.factors, la, lb)]
                for lab, k in _outer(parts).items():
                    out[lab] += ma * mb * k
    else:
        for la, ma in x.items():
            for lb, mb in y.items():
                for lab, k in _klimyk(g, la, lb).items():
                    out[lab] += ma * mb * k
    fc = FormalChar(g, out)
    check_dimension(fc, x.dimension() * y.dimension())
    return fc


def product_char(factor_chars: Iterable[FormalChar]) -> FormalChar:
    """Outer tensor product of characters of the individual factors."""
    chars = list(factor_chars)
    if not chars:
        raise ValueError("need at least one character")
    factors = []
    for c in chars:
        factors.extend(as_factors(c.group))
    group = ProductGroup(tuple(factors))
    out: dict = {(): 1}
    for c in chars:
        single = not isinstance(c.group, ProductGroup)
        out = {
            a + ((lab,) if single else tuple(lab)): m * k
            for a, m in out.items()
            for lab, k in c.items()
        }
    return FormalChar(group, out)


# ---------------------------------------------------------------------------
# symmetric and exterior powers

_power_memo: dict = {}
_power_lock = threading.Lock()
_disk_cache = None


def set_disk_cache(cache) -> None:
    """Install a persistent cache object with ``get(key)`` / ``put(key, value)``."""
    global _disk_cache
    _disk_cache = cache


def get_disk_cache():
    return _disk_cache


def _newton_powers(ws_packed: Mapping[int, int], n: int, kind: str) -> list[dict[int, int]]:
    """Packed characters of S^d (kind="sym") or Lambda^d (kind="ext"), d = 0..n."""
    powers: list[dict[int, int]] = [{0: 1}]
    psi = [None] + [{k * w: m for w, m in ws_packed.items()} for k in range(1, n + 1)]
    for d in range(1, n + 1):
        acc: dict[int, int] = {}
        for k in range(1, d + 1):
            sign = 1 if kind == "sym" or k % 2 == 1 else -1
            for w, m in _convolve_packed(psi[k], powers[d - k]).items():
                acc[w] = acc.get(w, 0) + sign * m
        nxt = {}
        for w, m in acc.items():
            if m % d:
                raise ArithmeticError(f"Newton recursion not divisible by {d}")
            if m:
                if m < 0:
                    raise NotACharacterError("Newton recursion produced a negative multiplicity")
                nxt[w] = m // d
        powers.append(nxt)
    return powers


def _power_key(rep: FormalChar, kind: str, n: int) -> dict:
    return {
        "group": str(rep.group),
        "construction": kind,
        "weights": [[_flatten(rep.group, lab), m] for lab, m in rep.items()],
        "degree": n,
    }


def _power(rep: FormalChar, n: int, kind: str) -> FormalChar:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    g = rep.group
    if n == 0:
        return FormalChar.trivial(g)
    dim = rep.dimension()
    if kind == "ext" and n > dim:
        return FormalChar(g, {})
    memo_key = (g, kind, tuple(rep.items()), n)
    with _power_lock:
        hit = _power_memo.get(memo_key)
    if hit is not None:
        return hit
    cache = _disk_cache
    key = _power_key(rep, kind, n)
    expected = comb(dim + n - 1, n) if kind == "sym" else comb(dim, n)
    if cache is not None:
        stored = cache.get(key)
        if stored is not None:
            try:
                fc = FormalChar(g, {_unflatten(g, tuple(w)): m for w, m in stored})
                ok = fc.dimension() == expected
            except (TypeError, ValueError):
                ok = False
            if ok:
                with _power_lock:
                    _power_memo.setdefault(memo_key, fc)
                return fc
            warnings.warn(f"discarding cached {kind}^{n} entry with wrong dimension", RuntimeWarning, stacklevel=2)
    r = _flat_rank(g)
    packed = _pack_dict(character_of(rep).entries)
    powers = _newton_powers(packed, n, kind)
    fc = decompose(WeightMultiset(g, _unpack_dict(powers[n], r)))
    check_dimension(fc, expected)
    with _power_lock:
        _power_memo.setdefault(memo_key, fc)
    if cache is not None:
        cache.put(key, [[list(_flatten(g, lab)), m] for lab, m in fc.items()])
    return fc


def sym_power(g: Group, rep: FormalChar, n: int) -> FormalChar:
    """n-th symmetric power of ``rep``."""
    _same_group(g, rep.group)
    return _power(rep, n, "sym")


def ext_power(g: Group, rep: FormalChar, n: int) -> FormalChar:
    """n-th exterior power of ``rep`` (empty beyond its dimension)."""
    _same_group(g, rep.group)
    return _power(rep, n, "ext")


def clear_memo() -> None:
    with _power_lock:
        _power_memo.clear()


# ---------------------------------------------------------------------------
# restriction SL_m -> SO_m, Sp_m


def _gl_eps(a: Weight, total: int) -> list[int]:
    """Epsilon coordinates of an SL_m weight with known GL degree ``total``."""
    m = len(a) + 1
    num = total - sum((i + 1) * x for i, x in enumerate(a))
    if num % m:
        raise ValueError("weight and degree are inconsistent")
    x = [0] * m
    x[m - 1] = num // m
    for i in range(m - 2, -1, -1):
        x[i] = x[i + 1] + a[i]
    return x


def fold_eps(x: list[int]) -> list[int]:
    """Restrict GL_m epsilon coordinates to the torus of SO_m / Sp_m.

    Basis vectors e_i and e_{m+1-i} are paired by the invariant form, so the
    torus is diag(t_1, ..., t_n, [1], t_n^-1, ..., t_1^-1).
    """
    m = len(x)
    return [x[i] - x[m - 1 - i] for i in range(m // 2)]


def restrict_classical(m: int, target: str, lam: Partition) -> FormalChar:
    """Decompose the SL_m irreducible V(lam) under SO_m or Sp_m."""
    from .rootdata import SL, SO, Sp, eps_to_fundamental, partition_to_weight

    lam = partition(lam)
    if len(lam) > m:
        raise ValueError("partition too long for SL_m")
    if target == "so":
        h = SO(m)
    elif target == "sp":
        h = Sp(m)
    else:
        raise ValueError(f"unknown target {target!r}")
    src = SL(m)
    w = partition_to_weight(src, lam)
    total = sum(lam)
    out: Counter = Counter()
    for mu, k in _full_character(src, w).items():
        y = fold_eps(_gl_eps(mu, total))
        out[eps_to_fundamental(h, y)] += k
    fc = decompose(WeightMultiset(h, out))
    check_dimension(fc, dimension(src, w))
    return fc
