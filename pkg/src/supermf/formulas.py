"""Closed-form decompositions of a few symmetric and exterior powers.

All results are ``FormalChar`` values labeled in fundamental coordinates, so
they compare directly with ``charengine.sym_power`` / ``ext_power``.  GL
partition labels are converted with ``partition_to_weight``; inside one
degree this loses no information.
"""

from __future__ import annotations

from collections import Counter

from .charengine import FormalChar
from .lr import GLFormalSum
from .partitions import conjugate, nested_hooks, partitions_of
from .rootdata import SL, GroupType, ProductGroup, Sp, Weight, partition_to_weight


def _check_sl(n: int) -> GroupType:
    if n < 2:
        raise ValueError("SL_n needs n >= 2")
    return SL(n)


def duality_sym(n: int, m: int, k: int) -> FormalChar:
    """S^k(C^n (x) C^m) = sum over |lam| = k, l(lam) <= min(n, m) of V(lam) (x) V(lam)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    gn, gm = _check_sl(n), _check_sl(m)
    terms = {
        (partition_to_weight(gn, lam), partition_to_weight(gm, lam)): 1
        for lam in partitions_of(k, max_length=min(n, m))
    }
    return FormalChar(ProductGroup((gn, gm)), terms)


def duality_skew(n: int, m: int, k: int) -> FormalChar:
    """Lambda^k(C^n (x) C^m) = sum over lam in an n x m box of V(lam) (x) V(lam^t)."""
    if not 0 <= k <= n * m:
        raise ValueError("degree must lie in [0, n*m]")
    gn, gm = _check_sl(n), _check_sl(m)
    terms = {
        (partition_to_weight(gn, lam), partition_to_weight(gm, conjugate(lam))): 1
        for lam in partitions_of(k, max_length=n, max_part=m)
    }
    return FormalChar(ProductGroup((gn, gm)), terms)


def _sl_sum(n: int, labels) -> FormalChar:
    g = _check_sl(n)
    c = Counter(partition_to_weight(g, lam) for lam in labels if len(lam) <= n)
    return FormalChar(g, c)


def sym_power_S2(n: int, k: int) -> FormalChar:
    """S^k(S^2 C^n): partitions of 2k with even parts."""
    return _sl_sum(n, (lam for lam in partitions_of(2 * k, max_length=n) if all(x % 2 == 0 for x in lam)))


def sym_power_L2(n: int, k: int) -> FormalChar:
    """S^k(Lambda^2 C^n): partitions of 2k with even columns."""
    return _sl_sum(n, (lam for lam in partitions_of(2 * k, max_length=n) if all(x % 2 == 0 for x in conjugate(lam))))


def ext_power_S2(n: int, k: int) -> FormalChar:
    """Lambda^k(S^2 C^n): nested (r+1, r-1)-hooks."""
    return _sl_sum(n, sorted(nested_hooks(k, "sym-skew")))


def ext_power_L2(n: int, k: int) -> FormalChar:
    """Lambda^k(Lambda^2 C^n): nested (r, r)-hooks."""
    return _sl_sum(n, sorted(nested_hooks(k, "ext-skew")))


def ext2_symk_sl2(k: int) -> FormalChar:
    """Lambda^2(S^k C^2) = V(2k-2) + V(2k-6) + ... for SL_2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return FormalChar(SL(2), {(2 * k - 2 - 4 * j,): 1 for j in range((k - 1) // 2 + 1)})


def three_tensor(k: int, l: int, length_cap: int | None = None) -> GLFormalSum:
    """{1}.{l}.{k} for k >= l >= 1, written out term by term."""
    if not k >= l >= 1:
        raise ValueError("need k >= l >= 1")
    c: Counter = Counter({(k + l + 1,): 1})
    for i in range(l):
        c[(k + l - i, i + 1)] += 2
    if l < k:
        c[(k, l + 1)] += 1
    for i in range(1, l + 1):
        c[(k + l - i, i, 1)] += 1
    return GLFormalSum(dict(c), length_cap)


def sym_sp_sl2(n: int, k: int) -> FormalChar:
    """S^k(C^2n (x) C^2) for Sp_2n x SL_2: <k-i-j, i-j> (x) {k-2i}, 0 <= j <= i <= k/2."""
    if n < 2:
        raise ValueError("Sp_2n needs n >= 2 here")
    if k < 0:
        raise ValueError("degree must be nonnegative")
    sp, sl = Sp(2 * n), SL(2)
    terms: Counter = Counter()
    for i in range(k // 2 + 1):
        for j in range(i + 1):
            terms[(partition_to_weight(sp, (k - i - j, i - j)), (k - 2 * i,))] += 1
    return FormalChar(ProductGroup((sp, sl)), terms)


def fast_path(group: GroupType | ProductGroup, weight, kind: str, degree: int) -> FormalChar | None:
    """Closed form for the ``kind`` power ("sym"/"ext") of an irreducible, if one is known.

    Recognized modules: C^n, S^2 C^n and Lambda^2 C^n of SL_n, S^k C^2 in
    exterior degree 2, and C^n (x) C^m of SL_n x SL_m.  Returns None otherwise.
    """
    if degree < 0:
        return None
    if isinstance(group, ProductGroup):
        if len(group.factors) != 2 or any(f.family != "A" for f in group.factors):
            return None
        (a, b), (wa, wb) = group.factors, weight
        if wa != _fund(a, 1) or wb != _fund(b, 1):
            return None
        n, m = a.rank + 1, b.rank + 1
        if kind == "sym":
            return duality_sym(n, m, degree)
        if degree > n * m:
            return FormalChar(group, {})
        return duality_skew(n, m, degree)
    if group.family != "A":
        return None
    n = group.rank + 1
    w = tuple(weight)
    if w == _fund(group, 1):
        if kind == "sym":
            return _sl_sum(n, [(degree,)])
        return _sl_sum(n, [(1,) * degree] if degree <= n else [])
    if w == tuple(2 if i == 0 else 0 for i in range(group.rank)):
        if kind == "sym":
            return sym_power_S2(n, degree)
        if degree > n * (n + 1) // 2:
            return FormalChar(group, {})
        return ext_power_S2(n, degree)
    if n >= 3 and w == _fund(group, 2):
        if kind == "sym":
            return sym_power_L2(n, degree)
        if degree > n * (n - 1) // 2:
            return FormalChar(group, {})
        return ext_power_L2(n, degree)
    if n == 2 and kind == "ext" and degree == 2 and w[0] >= 1:
        return ext2_symk_sl2(w[0])
    return None


def _fund(g: GroupType, i: int) -> Weight:
    return tuple(1 if j == i - 1 else 0 for j in range(g.rank))
