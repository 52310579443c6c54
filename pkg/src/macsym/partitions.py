"""Integer partitions: cell statistics, orders and enumeration."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Construction validates instead of sorting, so malformed index data
    coming from files or the command line is rejected loudly.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"partition parts must be positive integers: {parts!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiset(cls, parts) -> Partition:
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part with zero padding."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicities(self) -> Counter:
        return Counter(self)

    def cells(self):
        for r, row in enumerate(self, start=1):
            for c in range(1, row + 1):
                yield (r, c)

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def conjugate(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def _check_cell(lam, s):
    r, c = s
    if r < 1 or c < 1 or r > len(lam) or c > lam[r - 1]:
        raise ValueError(f"cell not in partition: {s} in {list(lam)}")


def arm(lam, s) -> int:
    _check_cell(lam, s)
    return lam[s[0] - 1] - s[1]


def leg(lam, s) -> int:
    _check_cell(lam, s)
    return conjugate(lam).part(s[1]) - s[0]


def arm_colength(lam, s) -> int:
    _check_cell(lam, s)
    return s[1] - 1


def leg_colength(lam, s) -> int:
    _check_cell(lam, s)
    return s[0] - 1


def hook(lam, s) -> int:
    return arm(lam, s) + leg(lam, s) + 1


def arms_legs(lam):
    """Yield (cell, arm, leg) for every cell; one conjugate for the whole diagram."""
    conj = conjugate(lam)
    for r, row in enumerate(lam, start=1):
        for c in range(1, row + 1):
            yield (r, c), row - c, conj[c - 1] - r


def n_stat(lam) -> int:
    return sum(i * p for i, p in enumerate(lam))


def union_double(lam) -> Partition:
    return Partition.from_multiset(list(lam) * 2)


def dominance_leq(mu, lam) -> bool:
    if sum(mu) != sum(lam):
        raise ValueError("incomparable weights")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def vertical_strip_cells(lam, mu):
    """Cells of lam/mu if it is a vertical strip, otherwise None."""
    lam, mu = tuple(lam), tuple(mu)
    if len(mu) > len(lam):
        return None
    cells = set()
    for r in range(1, len(lam) + 1):
        a = lam[r - 1]
        b = mu[r - 1] if r <= len(mu) else 0
        if b > a or a - b > 1:
            return None
        if a - b == 1:
            cells.add((r, a))
    return cells


def is_vertical_strip(lam, mu) -> bool:
    return vertical_strip_cells(lam, mu) is not None


@lru_cache(maxsize=None)
def _partitions(n: int, bound: int) -> tuple:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_of(n: int) -> list:
    """All partitions of n in reverse lexicographic order, [n] first."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return list(_partitions(n, n))


def z_coeff(lam) -> int:
    """z_lam = prod_i i^{m_i} m_i!"""
    out = 1
    for i, m in Counter(lam).items():
        out *= i**m * factorial(m)
    return out


def sign(lam) -> int:
    """Sign of a permutation of cycle type lam."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def class_size(lam) -> int:
    """Number of permutations in S_n with cycle type lam."""
    return factorial(sum(lam)) // z_coeff(lam)


def add_vertical_strips(mu, r: int):
    """All lam with lam/mu a vertical strip of r boxes, in reverse-lex order."""
    mu = list(mu)
    rows = len(mu) + r
    padded = mu + [0] * r
    out = []

    def rec(i, left, cur):
        if i == rows:
            if left == 0:
                out.append(Partition([p for p in cur if p]))
            return
        for add in (1, 0):
            if add > left:
                continue
            v = padded[i] + add
            if i and v > cur[-1]:
                continue
            rec(i + 1, left - add, cur + [v])

    rec(0, r, [])
    return out


def removable_cells(lam):
    return [(r, lam[r - 1]) for r in range(1, len(lam) + 1)
            if r == len(lam) or lam[r] < lam[r - 1]]


def remove_cell(lam, r: int) -> Partition:
    parts = list(lam)
    parts[r - 1] -= 1
    return Partition([p for p in parts if p])
