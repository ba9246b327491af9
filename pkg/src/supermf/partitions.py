"""Partitions and Young-diagram combinatorics.

A partition is a plain tuple of positive integers in weakly decreasing
order, with no trailing zeros.  ``()`` is the empty partition.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from functools import lru_cache

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return them in canonical form (trailing zeros dropped)."""
    p = [int(x) for x in parts]
    while p and p[-1] == 0:
        p.pop()
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing: {p}")
    return tuple(p)


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``mu`` fits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def get(lam: Partition, i: int) -> int:
    return lam[i] if i < len(lam) else 0


def add_horizontal_strip(lam: Partition, l: int, max_length: int) -> set[Partition]:
    """All shapes obtained from ``lam`` by adding ``l`` boxes, no two in one column."""
    if l < 0:
        raise ValueError("strip size must be nonnegative")
    out: set[Partition] = set()
    rows = len(lam) + 1

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == rows:
            if left == 0:
                out.add(partition(acc))
            return
        cur = get(lam, i)
        # new row i may grow up to the old length of row i-1
        cap = left if i == 0 else min(left, lam[i - 1] - cur)
        for a in range(cap, -1, -1):
            if a + cur > 0 and i >= max_length:
                continue
            rec(i + 1, left - a, acc + [cur + a])

    rec(0, l, [])
    return out


def add_vertical_strip(lam: Partition, l: int, max_length: int) -> set[Partition]:
    """All shapes obtained from ``lam`` by adding ``l`` boxes, no two in one row."""
    if l < 0:
        raise ValueError("strip size must be nonnegative")
    out: set[Partition] = set()
    rows = len(lam) + l

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == rows:
            if left == 0:
                out.add(partition(acc))
            return
        cur = get(lam, i)
        for a in (1, 0):
            if a > left:
                continue
            new = cur + a
            if i > 0 and new > acc[i - 1]:
                continue
            if new > 0 and i >= max_length:
                continue
            rec(i + 1, left - a, acc + [new])

    rec(0, l, [])
    return out


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_length is None:
        max_length = n
    if max_part is None:
        max_part = n
    yield from _partitions_rec(n, max_part, max_length)


def _partitions_rec(n: int, max_part: int, max_length: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_rec(n - first, first, max_length - 1):
            yield (first,) + rest


def hook(arm_len: int, leg_len: int) -> Partition:
    """The (s,t)-hook: first row ``s``, then ``t`` rows of length one."""
    return partition([arm_len] + [1] * leg_len)


def from_frobenius(arms: Iterable[int], legs: Iterable[int]) -> Partition:
    """Assemble a partition from Frobenius coordinates (a_1 > a_2 > ... | b_1 > b_2 > ...)."""
    a, b = list(arms), list(legs)
    if len(a) != len(b):
        raise ValueError("arm and leg sequences differ in length")
    d = len(a)
    if any(a[i] <= a[i + 1] for i in range(d - 1)) or any(b[i] <= b[i + 1] for i in range(d - 1)):
        raise ValueError("Frobenius coordinates must be strictly decreasing")
    rows = [a[i] + i + 1 for i in range(d)]
    cols = [b[i] + i + 1 for i in range(d)]
    height = cols[0] if d else 0
    lam = []
    for r in range(height):
        if r < d:
            lam.append(rows[r])
        else:
            lam.append(sum(1 for c in cols if c > r))
    return partition(lam)


@lru_cache(maxsize=None)
def _strict_compositions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    """Strictly decreasing sequences of positive integers summing to ``n``, parts <= largest."""
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_compositions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def nested_hooks(n: int, kind: str) -> set[Partition]:
    """Partitions assembled from nested hooks with parameters r_1 > r_2 > ... summing to ``n``.

    ``kind="sym-skew"`` nests (r+1, r-1)-hooks, ``kind="ext-skew"`` nests
    (r, r)-hooks.  The i-th hook has its corner on the diagonal cell (i, i).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "sym-skew":
        shape = lambda r: (r + 1, r - 1)  # noqa: E731
    elif kind == "ext-skew":
        shape = lambda r: (r, r)  # noqa: E731
    else:
        raise ValueError(f"unknown nested hook kind {kind!r}")
    out = set()
    for rs in _strict_compositions(n, n):
        hooks = [shape(r) for r in rs]
        ok = all(
            hooks[i + 1][0] <= hooks[i][0] - 1 and hooks[i + 1][1] <= hooks[i][1] - 1
            for i in range(len(hooks) - 1)
        )
        if not ok:
            continue
        # hook (s, t) has arm s-1 and leg t beyond its corner
        out.add(from_frobenius([s - 1 for s, _ in hooks], [t for _, t in hooks]))
    return out


_PARTITION_RE = re.compile(r"^\(\s*(\d+(\s*,\s*\d+)*)?\s*\)$")


def parse_partition(text: str) -> Partition:
    """Parse ``"(3,2,1)"`` or ``"()"``."""
    text = text.strip()
    if not _PARTITION_RE.match(text):
        raise ValueError(f"not a partition literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    return partition(int(x) for x in body.split(","))


def format_partition(lam: Partition) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"
