"""Universal characters {lam}, [lam], <lam> and Littlewood branching.

``branch_to_orth`` / ``branch_to_symp`` expand an SL_m character {lam} in
orthogonal / symplectic universal characters.  The expansions are valid for
every m; turning them into actual irreducibles needs modification rules once
a label has too many rows.  Only the stable range and the two-column family
(2^c, 1^d) in odd orthogonal groups are handled here; anything else raises
``ModificationNotImplemented`` and callers fall back to the character engine.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field

from .charengine import FormalChar
from .lr import even_branching_coeff
from .partitions import Partition, conjugate, partition
from .rootdata import GroupType, partition_to_weight


class ModificationNotImplemented(ValueError):
    pass


@dataclass(frozen=True)
class UniversalSum:
    kind: str  # "gl", "orth" or "symp"
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("gl", "orth", "symp"):
            raise ValueError(f"unknown universal character kind {self.kind!r}")
        clean = {partition(k): v for k, v in dict(self.terms).items() if v}
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    def __getitem__(self, lam) -> int:
        return self.terms.get(partition(lam), 0)

    def __add__(self, other: "UniversalSum") -> "UniversalSum":
        if other.kind != self.kind:
            raise ValueError("cannot add universal sums of different kinds")
        c = Counter(self.terms)
        c.update(other.terms)
        return UniversalSum(self.kind, c)

    def items(self):
        return self.terms.items()


def _sub_partitions(lam: Partition):
    def rec(i, prev):
        if i == len(lam):
            yield ()
            return
        for x in range(min(prev, lam[i]), -1, -1):
            for rest in rec(i + 1, x):
                yield (x,) + rest

    for mu in rec(0, lam[0] if lam else 0):
        yield partition(mu)


def _branch(lam: Partition, kind: str, mode: str) -> UniversalSum:
    lam = partition(lam)
    terms = {}
    for mu in _sub_partitions(lam):
        c = even_branching_coeff(lam, mu, mode)
        if c:
            terms[mu] = c
    return UniversalSum(kind, terms)


def branch_to_orth(lam: Partition) -> UniversalSum:
    """{lam} = sum over mu of (sum over even-row beta of c^lam_{mu,beta}) [mu]."""
    return _branch(lam, "orth", "even-rows")


def branch_to_symp(lam: Partition) -> UniversalSum:
    """{lam} = sum over mu of (sum over even-column beta of c^lam_{mu,beta}) <mu>."""
    return _branch(lam, "symp", "even-columns")


def specialize_symp(s: UniversalSum, n: int) -> FormalChar:
    """Read each <mu> as an irreducible of Sp_2n; only the stable range is supported."""
    if s.kind != "symp":
        raise ValueError("expected a symplectic universal sum")
    g = GroupType("C", n)
    out: Counter = Counter()
    for mu, m in s.items():
        if len(mu) > n:
            raise ModificationNotImplemented("symplectic modification not implemented; use oracle")
        out[partition_to_weight(g, mu, "sp")] += m
    return FormalChar(g, out)


def _two_column(mu: Partition) -> tuple[int, int] | None:
    if any(x > 2 for x in mu):
        return None
    c = sum(1 for x in mu if x == 2)
    return c, len(mu) - c


def modify_orth(mu: Partition, m: int) -> tuple[int, Partition | None]:
    """Apply the odd-orthogonal modification rule to [mu]; returns (sign, label or None)."""
    n = (m - 1) // 2
    if len(mu) <= n:
        return 1, mu
    cd = _two_column(mu)
    if cd is None:
        raise ModificationNotImplemented("orthogonal modification beyond implemented family; use oracle")
    c, d = cd
    h = 2 * len(mu) - m
    if h <= d:
        return 1, partition([2] * c + [1] * (d - h))
    if h == d + 1:
        return 1, None
    return ORTH_TWO_COLUMN_SIGN, partition([2] * (c - (h - d - 1)) + [1] * (h - d - 2))


# Sign of the h > d+1 branch.  The removed boundary strip then spans two
# columns; see tests/test_universal.py for the oracle comparison.
ORTH_TWO_COLUMN_SIGN = -1


def specialize_orth(s: UniversalSum, m: int) -> FormalChar:
    """Turn an orthogonal universal sum into a character of SO_m.

    Odd m uses the two-column modification family.  Even m is supported in
    the stable range only; a label with exactly m/2 rows splits into its two
    chiral halves.
    """
    if s.kind != "orth":
        raise ValueError("expected an orthogonal universal sum")
    if m < 3 or (m % 2 == 0 and m < 6):
        raise ValueError("need odd m >= 3 or even m >= 6")
    n = m // 2
    out: Counter = Counter()
    if m % 2 == 0:
        g = GroupType("D", n)
        for mu, k in s.items():
            if len(mu) > n:
                raise ModificationNotImplemented("even orthogonal modification not implemented; use oracle")
            w = partition_to_weight(g, mu, "so")
            out[w] += k
            if len(mu) == n:
                out[w[:-2] + (w[-1], w[-2])] += k
        return FormalChar(g, out)
    g = GroupType("B", n)
    for mu, k in s.items():
        sign, nu = modify_orth(mu, m)
        while nu is not None and len(nu) > n:
            s2, nu = modify_orth(nu, m)
            sign *= s2
        if nu is not None:
            out[partition_to_weight(g, nu, "so")] += sign * k
    if any(v < 0 for v in out.values()):
        raise ModificationNotImplemented("modification produced a virtual character")
    return FormalChar(g, out)


def restrict_two_column_closed_form(a: int, b: int) -> UniversalSum:
    """{2^a, 1^b} = sum_{i=0..a} [2^(a-i), 1^b] for SL_m restricted to O_m."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    c: Counter = Counter()
    for i in range(a + 1):
        c[partition([2] * (a - i) + [1] * b)] += 1
    return UniversalSum("orth", c)


def conjugate_label(lam: Partition) -> Partition:
    return conjugate(partition(lam))
