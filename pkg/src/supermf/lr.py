"""Littlewood-Richardson coefficients and products of Schur-labeled sums.

Products are computed by placing the rows of the second factor as successive
horizontal strips (label ``i`` for row ``i``) subject to the lattice-word
condition on the reverse reading word.  Label ``i+1`` may appear in rows
``1..r`` at most as often as label ``i`` appears in rows ``1..r-1``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, conjugate, contains, get, partition, partitions_of


def _strips_with_counts(lam: Partition, l: int, max_rows: int):
    """Yield (new_shape, per_row_counts) for horizontal strips of size ``l``."""
    rows = min(len(lam) + 1, max_rows)

    def rec(i, left, acc, counts):
        if i == rows:
            if left == 0:
                yield tuple(x for x in acc if x), tuple(counts)
            return
        cur = get(lam, i)
        cap = left if i == 0 else min(left, lam[i - 1] - cur)
        for a in range(cap, -1, -1):
            yield from rec(i + 1, left - a, acc + [cur + a], counts + [a])

    yield from rec(0, l, [], [])


@lru_cache(maxsize=None)
def lr_product_terms(mu: Partition, nu: Partition, max_length: int | None = None) -> tuple[tuple[Partition, int], ...]:
    """Expansion of s_mu * s_nu as sorted (lambda, c^lambda_{mu,nu}) pairs.

    ``max_length`` drops every lambda with more rows than allowed.
    """
    cap = len(mu) + len(nu)
    if max_length is not None:
        cap = min(cap, max_length)
    if len(mu) > cap or len(nu) > cap:
        return ()
    result: Counter = Counter()

    def place(k: int, shape: Partition, prev_cum: tuple[int, ...]) -> None:
        # prev_cum[r] = number of label-k entries in rows 0..r
        if k == len(nu):
            result[shape] += 1
            return
        for new_shape, counts in _strips_with_counts(shape, nu[k], cap):
            cum = []
            total = 0
            ok = True
            for r, c in enumerate(counts):
                total += c
                if k > 0:
                    allowed = prev_cum[r - 1] if r > 0 else 0
                    if total > allowed:
                        ok = False
                        break
                cum.append(total)
            if ok:
                place(k + 1, new_shape, tuple(cum) + (total,) * (cap + 1 - len(cum)))

    place(0, mu, (0,) * (cap + 1))
    return tuple(sorted(result.items(), reverse=True))


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu}; zero unless |mu|+|nu| = |lam| and mu, nu fit inside lam."""
    if sum(mu) + sum(nu) != sum(lam) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    return dict(lr_product_terms(mu, nu, len(lam))).get(lam, 0)


def even_branching_coeff(lam: Partition, mu: Partition, mode: str) -> int:
    """Sum of c^lam_{mu,beta} over beta with all rows even or all columns even."""
    if mode == "even-rows":
        is_even = lambda b: all(x % 2 == 0 for x in b)  # noqa: E731
    elif mode == "even-columns":
        is_even = lambda b: all(x % 2 == 0 for x in conjugate(b))  # noqa: E731
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rest = sum(lam) - sum(mu)
    if rest < 0 or not contains(lam, mu):
        return 0
    return sum(lr_coeff(lam, mu, beta) for beta in partitions_of(rest) if is_even(beta) and contains(lam, beta))


@dataclass(frozen=True)
class GLFormalSum:
    """Finite sum of Schur labels {lam} with positive multiplicities."""

    terms: Mapping[Partition, int] = field(default_factory=dict)
    length_cap: int | None = None

    def __post_init__(self):
        cleaned = {}
        for lam, m in dict(self.terms).items():
            lam = partition(lam)
            if m < 0:
                raise ValueError(f"negative multiplicity for {lam}")
            if m == 0:
                continue
            if self.length_cap is not None and len(lam) > self.length_cap:
                continue
            cleaned[lam] = m
        object.__setattr__(self, "terms", dict(sorted(cleaned.items(), reverse=True)))

    @classmethod
    def of(cls, *labels: Iterable[int], length_cap: int | None = None) -> "GLFormalSum":
        c: Counter = Counter(partition(lam) for lam in labels)
        return cls(dict(c), length_cap)

    def __add__(self, other: "GLFormalSum") -> "GLFormalSum":
        cap = _merge_caps(self.length_cap, other.length_cap)
        c = Counter(self.terms)
        c.update(other.terms)
        return GLFormalSum(dict(c), cap)

    def __mul__(self, other: "GLFormalSum") -> "GLFormalSum":
        return schur_multiply(self, other)

    def __getitem__(self, lam) -> int:
        return self.terms.get(partition(lam), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()


def _merge_caps(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    if a != b:
        raise ValueError(f"incompatible length caps {a} and {b}")
    return a


def schur_multiply(a: GLFormalSum, b: GLFormalSum) -> GLFormalSum:
    cap = _merge_caps(a.length_cap, b.length_cap)
    out: Counter = Counter()
    for mu, m in a.items():
        for nu, n in b.items():
            for lam, c in lr_product_terms(mu, nu, cap):
                out[lam] += m * n * c
    return GLFormalSum(dict(out), cap)
