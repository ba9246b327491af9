"""Root data and label conventions.

Conventions (fixed for the whole package):

* Bourbaki node numbering for every family.  The Cartan matrix entry
  ``A[i][j]`` is ``<alpha_i, alpha_j^vee>``, so row ``i`` of ``A`` is the simple
  root ``alpha_i`` written in fundamental-weight coordinates.
* G2: ``alpha_1`` is short, so ``(1,0)`` is the 7-dimensional representation.
* E6/E7: node 2 is the branch node attached to node 4.
* Partition labels use the epsilon-coordinate dictionaries below.  For a
  weight with epsilon coordinates ``y`` (``x`` for SL):

  - A_r  (flavor ``gl``): ``a_i = x_i - x_{i+1}``; a partition with r+1 rows
    is reduced by removing full columns.
  - B_n  (flavor ``so``): ``a_i = y_i - y_{i+1}`` (i<n), ``a_n = 2 y_n``.
  - C_n  (flavor ``sp``): ``a_i = y_i - y_{i+1}`` (i<n), ``a_n = y_n``.
  - D_n  (flavor ``so``): ``a_i = y_i - y_{i+1}`` (i<n-1),
    ``a_{n-1} = y_{n-1} + y_n``, ``a_n = y_{n-1} - y_n``.  With this choice
    the half-spin weight with all coordinates +1/2 is ``omega_{n-1}`` and
    ``Delta^+ = omega_{n-1}``, ``Delta^- = omega_n``.

The same dictionaries are used when weights of SL_m are folded onto the
Cartan subalgebra of SO_m or Sp_m (see ``charengine.restrict_classical``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod

import sympy

from .partitions import Partition, parse_partition, partition

Weight = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "G", "E")


@dataclass(frozen=True, order=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES:
            raise ValueError(f"unsupported family {f!r}")
        if r < 1:
            raise ValueError("rank must be positive")
        if f == "D" and r < 3:
            raise ValueError(f"D_{r} is not simple in this library; D requires rank >= 3")
        if f == "G" and r != 2:
            raise ValueError("G only exists in rank 2")
        if f == "E" and r not in (6, 7):
            raise ValueError("only E6 and E7 are supported")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def natural_flavor(self) -> str | None:
        return {"A": "gl", "B": "so", "C": "sp", "D": "so"}.get(self.family)

    @property
    def classical_name(self) -> str:
        f, r = self.family, self.rank
        if f == "A":
            return f"SL({r + 1})"
        if f == "B":
            return f"SO({2 * r + 1})"
        if f == "C":
            return f"Sp({2 * r})"
        if f == "D":
            return f"SO({2 * r})"
        return str(self)


def A(n: int) -> GroupType:
    return GroupType("A", n)


def SL(m: int) -> GroupType:
    return GroupType("A", m - 1)


def SO(m: int) -> GroupType:
    return GroupType("B", (m - 1) // 2) if m % 2 else GroupType("D", m // 2)


def Sp(m: int) -> GroupType:
    if m % 2:
        raise ValueError("Sp needs an even dimension")
    return GroupType("C", m // 2)


G2 = GroupType("G", 2)
E6 = GroupType("E", 6)
E7 = GroupType("E", 7)


@dataclass(frozen=True)
class ProductGroup:
    factors: tuple[GroupType, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("a product group needs at least one factor")

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def split(self, flat: Weight) -> tuple[Weight, ...]:
        out, i = [], 0
        for f in self.factors:
            out.append(tuple(flat[i:i + f.rank]))
            i += f.rank
        return tuple(out)


def as_factors(g: GroupType | ProductGroup) -> tuple[GroupType, ...]:
    return g.factors if isinstance(g, ProductGroup) else (g,)


# ---------------------------------------------------------------------------
# Cartan data


def _gram_simple_roots(g: GroupType) -> list[list[Fraction]]:
    f, n = g.family, g.rank
    if f == "E":
        edges = {(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)}
        B = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            B[i][i] = Fraction(2)
        for a, b in edges:
            if a <= n and b <= n:
                B[a - 1][b - 1] = B[b - 1][a - 1] = Fraction(-1)
        return B
    roots = _simple_roots_eps(g)
    return [[sum((x * y for x, y in zip(a, b)), Fraction(0)) for b in roots] for a in roots]


def _simple_roots_eps(g: GroupType) -> list[tuple[Fraction, ...]]:
    f, n = g.family, g.rank

    def e(i: int, dim: int) -> list[Fraction]:
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        return v

    def diff(i: int, j: int, dim: int) -> tuple[Fraction, ...]:
        return tuple(a - b for a, b in zip(e(i, dim), e(j, dim)))

    if f == "A":
        return [diff(i, i + 1, n + 1) for i in range(n)]
    if f == "G":
        return [(Fraction(1), Fraction(-1), Fraction(0)), (Fraction(-2), Fraction(1), Fraction(1))]
    out = [diff(i, i + 1, n) for i in range(n - 1)]
    if f == "B":
        out.append(tuple(e(n - 1, n)))
    elif f == "C":
        out.append(tuple(2 * x for x in e(n - 1, n)))
    elif f == "D":
        out.append(tuple(a + b for a, b in zip(e(n - 2, n), e(n - 1, n))))
    return out


@dataclass(frozen=True)
class RootData:
    group: GroupType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Weight, ...]  # fundamental coordinates
    gram_scale: int
    gram: tuple[tuple[int, ...], ...]  # gram_scale * (omega_i, omega_j)
    height_vector: tuple[int, ...]  # positive multiple of (row sums of A^{-1})
    root_pairings: tuple[tuple[int, ...], ...]  # gram @ root, one row per positive root

    @property
    def rank(self) -> int:
        return self.group.rank

    def inner(self, a: Weight, b: Weight) -> int:
        """Scaled inner product ``gram_scale * (a, b)``."""
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(len(a)) for j in range(len(b)) if a[i] and b[j])

    def height(self, w: Weight) -> int:
        return sum(x * h for x, h in zip(w, self.height_vector))


@lru_cache(maxsize=None)
def root_data(g: GroupType) -> RootData:
    B = _gram_simple_roots(g)
    n = g.rank
    cartan = tuple(tuple(int(2 * B[i][j] / B[j][j]) for j in range(n)) for i in range(n))
    Ainv = sympy.Matrix(cartan).inv()
    gram_frac = [[Fraction(str(Ainv[i, j])) * B[j][j] / 2 for j in range(n)] for i in range(n)]
    scale = lcm(*(x.denominator for row in gram_frac for x in row))
    gram = tuple(tuple(int(x * scale) for x in row) for row in gram_frac)
    rowsums = [sum((Fraction(str(Ainv[j, i])) for i in range(n)), Fraction(0)) for j in range(n)]
    hscale = lcm(*(x.denominator for x in rowsums))
    height_vector = tuple(int(x * hscale) for x in rowsums)

    # positive roots in simple-root coordinates via root strings
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for c in layer:
            fund = tuple(sum(c[i] * cartan[i][j] for i in range(n)) for j in range(n))
            for j in range(n):
                p = 0
                down = list(c)
                while True:
                    down[j] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - fund[j]
                if q > 0:
                    up = list(c)
                    up[j] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    pos = sorted(roots, key=lambda c: (sum(c), c))
    pos_fund = tuple(tuple(sum(c[i] * cartan[i][j] for i in range(n)) for j in range(n)) for c in pos)
    pairings = tuple(tuple(sum(gram[i][j] * r[j] for j in range(n)) for i in range(n)) for r in pos_fund)
    return RootData(g, cartan, pos_fund, scale, gram, height_vector, pairings)


def cartan_matrix(g: GroupType) -> tuple[tuple[int, ...], ...]:
    return root_data(g).cartan


def positive_roots(g: GroupType) -> tuple[Weight, ...]:
    return root_data(g).positive_roots


def validate_weight(g: GroupType, w) -> Weight:
    w = tuple(int(x) for x in w)
    if len(w) != g.rank:
        raise ValueError(f"weight length {len(w)} != rank {g.rank}")
    if any(x < 0 for x in w):
        raise ValueError(f"weight {w} is not dominant")
    return w


@lru_cache(maxsize=None)
def dimension(g: GroupType, w: Weight) -> int:
    """Weyl dimension formula."""
    w = validate_weight(g, w)
    rd = root_data(g)
    num, den = 1, 1
    shifted = tuple(x + 1 for x in w)
    rho = (1,) * g.rank
    for pair in rd.root_pairings:
        num *= sum(a * b for a, b in zip(shifted, pair))
        den *= sum(a * b for a, b in zip(rho, pair))
    if num % den:
        raise ArithmeticError("Weyl dimension formula did not give an integer")
    return num // den


def reflect(g: GroupType, w: Weight, i: int) -> Weight:
    row = root_data(g).cartan[i]
    c = w[i]
    return tuple(x - c * r for x, r in zip(w, row))


def to_dominant(g: GroupType, w: Weight) -> Weight:
    """The dominant representative of the Weyl orbit of ``w``."""
    cartan = root_data(g).cartan
    w = list(w)
    n = len(w)
    while True:
        for i in range(n):
            if w[i] < 0:
                c = w[i]
                row = cartan[i]
                for j in range(n):
                    w[j] -= c * row[j]
                break
        else:
            return tuple(w)


def dual_weight(g: GroupType, w: Weight) -> Weight:
    """Highest weight of the dual representation, i.e. the dominant conjugate of -w."""
    return to_dominant(g, tuple(-x for x in w))


def spin_label(g: GroupType, chirality: str) -> Weight:
    n = g.rank
    if g.family == "B" and chirality == "full":
        return tuple(1 if i == n - 1 else 0 for i in range(n))
    if g.family == "D" and chirality in ("plus", "minus"):
        idx = n - 2 if chirality == "plus" else n - 1
        return tuple(1 if i == idx else 0 for i in range(n))
    raise ValueError(f"no spin representation {chirality!r} for {g}")


def fundamental(g: GroupType, i: int) -> Weight:
    """omega_i with Bourbaki index ``i`` (1-based)."""
    if not 1 <= i <= g.rank:
        raise ValueError(f"no fundamental weight {i} for {g}")
    return tuple(1 if j == i - 1 else 0 for j in range(g.rank))


def standard_weight(g: GroupType) -> Weight:
    """Highest weight of the defining representation (omega_1 except for SO_3)."""
    if g.natural_flavor is not None:
        return partition_to_weight(g, (1,))
    return fundamental(g, 1)


def zero_weight(g: GroupType) -> Weight:
    return (0,) * g.rank


# ---------------------------------------------------------------------------
# epsilon-coordinate dictionaries


def eps_to_fundamental(g: GroupType, y) -> Weight:
    """Convert epsilon coordinates (length rank, or rank+1 for A) to fundamental ones."""
    f, n = g.family, g.rank
    y = list(y)
    if f == "A":
        y = y + [0] * (n + 1 - len(y))
        return tuple(y[i] - y[i + 1] for i in range(n))
    y = y + [0] * (n - len(y))
    head = [y[i] - y[i + 1] for i in range(n - 1)]
    if f == "B":
        return tuple(head + [2 * y[n - 1]])
    if f == "C":
        return tuple(head + [y[n - 1]])
    if f == "D":
        return tuple(head[: n - 2] + [y[n - 2] + y[n - 1], y[n - 2] - y[n - 1]])
    raise ValueError(f"no epsilon dictionary for {g}")


def partition_to_weight(g: GroupType, lam: Partition, flavor: str | None = None) -> Weight:
    lam = partition(lam)
    flavor = flavor or g.natural_flavor
    if flavor != g.natural_flavor:
        raise ValueError(f"flavor {flavor!r} does not match {g}")
    limit = g.rank + 1 if g.family == "A" else g.rank
    if len(lam) > limit:
        raise ValueError("partition too long for rank")
    return eps_to_fundamental(g, lam)


def weight_to_partition(g: GroupType, w: Weight, flavor: str | None = None) -> Partition:
    """Inverse of ``partition_to_weight`` (A-type results have at most ``rank`` rows)."""
    w = validate_weight(g, w)
    flavor = flavor or g.natural_flavor
    if flavor != g.natural_flavor:
        raise ValueError(f"flavor {flavor!r} does not match {g}")
    f, n = g.family, g.rank
    if f == "A":
        return partition(sum(w[i:]) for i in range(n))
    if f == "B":
        if w[-1] % 2:
            raise ValueError(f"{w} is a spin weight, not a partition label")
        last = w[-1] // 2
    elif f == "C":
        last = w[-1]
    elif f == "D":
        s, d = w[-2] + w[-1], w[-2] - w[-1]
        if s % 2 or d < 0:
            raise ValueError(f"{w} is not a partition label for {g}")
        ys = [s // 2, d // 2]
        parts = ys[::-1]
        for i in range(n - 3, -1, -1):
            parts.append(parts[-1] + w[i])
        return partition(reversed(parts))
    else:
        raise ValueError(f"no partition labels for {g}")
    parts = [last]
    for i in range(n - 2, -1, -1):
        parts.append(parts[-1] + w[i])
    return partition(reversed(parts))


# ---------------------------------------------------------------------------
# textual forms

_GROUP_RE = re.compile(r"^(SL|SO|Sp|Spin)\(?(\d+)\)?([+-]?)$|^([ABCDGE])(\d+)$")


def parse_group(text: str) -> GroupType | ProductGroup:
    """Parse ``"SL(4)"``, ``"SO7"``, ``"Sp6"``, ``"G2"``, ``"B3"`` or products joined by ``x``."""
    parts = [p for p in re.split(r"\s*[x×]\s*", text.strip()) if p]
    groups = [_parse_simple(p) for p in parts]
    if len(groups) == 1:
        return groups[0]
    return ProductGroup(tuple(groups))


def _parse_simple(text: str) -> GroupType:
    m = _GROUP_RE.match(text.strip())
    if not m:
        raise ValueError(f"unknown group {text!r}")
    if m.group(4):
        return GroupType(m.group(4), int(m.group(5)))
    kind, dim = m.group(1), int(m.group(2))
    if kind == "SL":
        if dim < 2:
            raise ValueError("SL needs dimension >= 2")
        return SL(dim)
    if kind in ("SO", "Spin"):
        if dim < 3 or dim == 4:
            raise ValueError(f"{kind}({dim}) is not simple in this library")
        return SO(dim)
    return Sp(dim)


_WEIGHT_RE = re.compile(r"^\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]$")


def parse_weight(g: GroupType, text: str) -> Weight:
    """Parse ``"[a1,...,ar]"``, ``"part(p1,...)"``, ``"std"`` or ``"triv"``."""
    text = text.strip()
    if text == "std":
        return standard_weight(g)
    if text == "triv":
        return zero_weight(g)
    if text.startswith("part(") and text.endswith(")"):
        return partition_to_weight(g, parse_partition(text[4:]))
    if _WEIGHT_RE.match(text):
        body = text[1:-1].strip()
        coords = tuple(int(x) for x in body.split(",")) if body else ()
        return validate_weight(g, coords)
    raise ValueError(f"cannot parse weight {text!r}")


def format_weight(w: Weight) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def total_dimension(g: GroupType | ProductGroup, label) -> int:
    if isinstance(g, ProductGroup):
        return prod(dimension(f, tuple(w)) for f, w in zip(g.factors, label))
    return dimension(g, tuple(label))
