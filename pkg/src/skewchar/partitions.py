"""Generalized partitions, interlacing, epsilon-subtractions and type-B GT chains.

Parts are stored doubled so the half-integer pivot entries of odd-orthogonal
Gelfand-Tsetlin patterns share one representation with ordinary parts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class GeneralizedPartition:
    """Weakly decreasing nonnegative half-integers with a declared length.

    Zeros are tracked parts: ``(1, 0)`` and ``(1,)`` are different values.
    """

    doubled: tuple

    def __post_init__(self):
        d = tuple(int(x) for x in self.doubled)
        object.__setattr__(self, "doubled", d)
        if any(x < 0 for x in d):
            raise ValueError(f"negative part in {d}")
        if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
            raise ValueError(f"parts not weakly decreasing: {d}")

    @classmethod
    def of(cls, parts: Sequence) -> "GeneralizedPartition":
        out = []
        for p in parts:
            q = Fraction(p) * 2
            if q.denominator != 1:
                raise ValueError(f"part {p} is not a half-integer")
            out.append(int(q))
        return cls(tuple(out))

    @property
    def length(self) -> int:
        return len(self.doubled)

    @property
    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.doubled)

    @property
    def parts(self) -> tuple:
        return tuple(x // 2 if x % 2 == 0 else Fraction(x, 2) for x in self.doubled)

    def ints(self) -> tuple:
        if not self.is_integral:
            raise ValueError(f"partition {self} has half-integer parts")
        return tuple(x // 2 for x in self.doubled)

    @property
    def size(self) -> Fraction:
        return Fraction(sum(self.doubled), 2)

    def nonzero_length(self) -> int:
        return sum(1 for x in self.doubled if x)

    def to_json(self) -> dict:
        return {"doubled": list(self.doubled), "length": self.length}

    @classmethod
    def from_json(cls, obj) -> "GeneralizedPartition":
        d = tuple(obj["doubled"])
        if "length" in obj and obj["length"] != len(d):
            raise ValueError("declared length does not match the stored parts")
        return cls(d)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def as_partition(obj) -> GeneralizedPartition:
    if isinstance(obj, GeneralizedPartition):
        return obj
    return GeneralizedPartition.of(tuple(obj))


def as_ints(obj) -> tuple:
    """Integer parts of a partition given as a sequence or GeneralizedPartition."""
    if isinstance(obj, GeneralizedPartition):
        return obj.ints()
    t = tuple(int(x) for x in obj)
    if any(x < 0 for x in t) or any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"not a generalized partition: {tuple(obj)}")
    return t


def pad(lam: Sequence[int], n: int) -> tuple:
    lam = tuple(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"{lam} has more than {n} nonzero parts")
        return lam[:n]
    return lam + (0,) * (n - len(lam))


def strip(lam: Sequence[int]) -> tuple:
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu`` is a subdiagram of ``lam``."""
    lam, mu = strip(lam), strip(mu)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


# enumeration -----------------------------------------------------------

def partitions(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``n`` (positive parts) in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(n - first, rest_len, first):
            yield (first,) + rest


def partitions_upto(max_size: int, max_len: int | None = None) -> Iterator[tuple]:
    for n in range(max_size + 1):
        yield from partitions(n, max_len)


def generalized_partitions(length: int, max_size: int, max_part: int | None = None) -> Iterator[tuple]:
    """Weakly decreasing nonnegative tuples of exactly ``length`` entries with sum <= max_size."""
    if max_part is None:
        max_part = max_size
    if length == 0:
        yield ()
        return
    for first in range(min(max_part, max_size), -1, -1):
        for rest in generalized_partitions(length - 1, max_size - first, first):
            yield (first,) + rest


# operations ------------------------------------------------------------

def conjugate(lam) -> GeneralizedPartition:
    """Transpose of the Young diagram; the result has exactly ``lam_1`` parts."""
    parts = as_partition(lam)
    if not parts.is_integral:
        raise ValueError("conjugate is defined for integer partitions only")
    return GeneralizedPartition.of(conjugate_parts(parts.ints()))


def conjugate_parts(lam: Sequence[int]) -> tuple:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, max(lam) + 1))


def interlacings(lam, half_last: bool = False, cap=None) -> list:
    """Generalized partitions interlacing ``lam`` from below.

    ``half_last=False``: integer ``mu`` of length ``l-1`` with
    ``lam[i+1] <= mu[i] <= lam[i]``.  ``half_last=True``: ``alpha`` of length
    ``l`` whose first ``l-1`` entries interlace and whose last entry runs over
    half-integer steps in ``[0, min(lam[-1], cap)]``; ``cap=None`` means the
    previous row has no entry there, so only ``lam[-1]`` bounds it.
    """
    d = as_partition(lam).doubled
    l = len(d)
    if l == 0:
        return [GeneralizedPartition(())] if not half_last else []
    ranges = [range(_ceil_even(d[i + 1]), d[i] + 1, 2) for i in range(l - 1)]
    if half_last:
        top = d[-1]
        if cap is not None:
            top = min(top, int(Fraction(cap) * 2))
        ranges.append(range(0, top + 1))
    return [GeneralizedPartition(c) for c in itertools.product(*ranges)]


def _ceil_even(x: int) -> int:
    return x + (x % 2)


def epsilon_subtractions(lam) -> list:
    """All ``(lam - eps, |eps|)`` for ``eps`` in {0,1}^N that stay partitions."""
    parts = as_ints(lam)
    out = []
    for eps in itertools.product((0, 1), repeat=len(parts)):
        mu = tuple(p - e for p, e in zip(parts, eps))
        if mu and mu[-1] < 0:
            continue
        if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            continue
        out.append((GeneralizedPartition.of(mu), sum(eps)))
    return out


@dataclass(frozen=True)
class GTChain:
    """Rows ``z_0 = mu, z_1, ..., z_{2N} = lam`` of an odd-orthogonal GT pattern."""

    rows: tuple

    @property
    def n(self) -> int:
        return (len(self.rows) - 1) // 2

    def weight_doubled(self) -> tuple:
        """Doubled exponent of ``x_i``: ``2|z_{2i-1}| - |z_{2i}| - |z_{2i-2}|`` (doubled)."""
        s = [sum(r.doubled) for r in self.rows]
        return tuple(2 * s[2 * i - 1] - s[2 * i] - s[2 * i - 2] for i in range(1, self.n + 1))

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows]}


def gt_chains(lam, mu, n: int) -> Iterator[GTChain]:
    """Enumerate odd-orthogonal GT chains from ``mu`` (length l) up to ``lam`` (length l+n).

    ``lam`` is zero-padded to ``l + n`` parts.  Rows are built from the top:
    an odd row takes integer entries interlacing the row above plus one
    half-integer last entry in ``[0, z_{2i, l+i}]``; the even row below it
    interlaces the odd row, which also enforces the pivot bound against the
    lower row.
    """
    mu_d = tuple(2 * p for p in as_ints(mu))
    l = len(mu_d)
    lam_i = as_ints(lam)
    try:
        lam_d = tuple(2 * p for p in pad(lam_i, l + n))
    except ValueError:
        return
    if not all(m <= x for m, x in zip(mu_d, lam_d)):
        return
    floor = mu_d

    def below(row, length):
        # lower bound from containment of mu in every row
        return [floor[j] if j < l else 0 for j in range(length)]

    def odd_rows(upper):
        m = len(upper)
        lo = below(upper, m)
        ranges = []
        for j in range(m - 1):
            a = max(_ceil_even(upper[j + 1]), _ceil_even(lo[j]))
            ranges.append(range(a, upper[j] + 1, 2))
        ranges.append(range(lo[m - 1], upper[m - 1] + 1))
        return itertools.product(*ranges)

    def even_rows(upper):
        m = len(upper) - 1
        lo = below(upper, m)
        ranges = []
        for j in range(m):
            a = max(_ceil_even(upper[j + 1]), lo[j])
            b = upper[j]
            ranges.append(range(a, b + 1, 2))
        return itertools.product(*ranges)

    def descend(i, row, acc):
        if i == 0:
            if row == mu_d:
                yield GTChain(tuple(GeneralizedPartition(r) for r in reversed(acc)))
            return
        for odd in odd_rows(row):
            for even in even_rows(odd):
                yield from descend(i - 1, even, acc + [odd, even])

    yield from descend(n, lam_d, [lam_d])
