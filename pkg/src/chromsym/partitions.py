"""Integer partitions and compositions with exact integer arithmetic.

Partitions are weakly decreasing tuples of positive parts and serve as the
index set for symmetric function bases and stable partition types.
Compositions keep the order of their parts; rim hook contents need it.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Iterator

from .errors import ContractViolation


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        t = tuple(parts)
        for a, b in zip(t, t[1:]):
            if a < b:
                raise ContractViolation(f"parts must be weakly decreasing: {t}")
        if t and t[-1] < 1:
            raise ContractViolation(f"parts must be positive: {t}")
        return super().__new__(cls, t)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Composition(tuple):
    """A tuple of positive integers where the order of parts is meaningful."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        t = tuple(parts)
        if any(p < 1 for p in t):
            raise ContractViolation(f"parts must be positive: {t}")
        return super().__new__(cls, t)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


def sort_to_partition(parts: Iterable[int]) -> Partition:
    """Sort arbitrary positive parts into a Partition."""
    return Partition(sorted(parts, reverse=True))


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: column lengths become the parts."""
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of mu is at most the matching prefix sum of lam.

    Both arguments must have equal weight; comparison pads the shorter one.
    """
    if lam.weight != mu.weight:
        raise ContractViolation(
            f"dominance needs equal weights: {lam.weight} != {mu.weight}"
        )
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_m > acc_l:
            return False
    return True


def multiplicity_factorial(lam: Partition) -> int:
    """Product of factorials of the part multiplicities of lam."""
    out = 1
    for mult in Counter(lam).values():
        out *= math.factorial(mult)
    return out


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield all partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ContractViolation(f"cannot partition a negative number: {n}")
    if n == 0:
        yield Partition()
        return
    cur = [n]
    while True:
        yield Partition(cur)
        # Find the rightmost part above 1; everything after it is a tail of 1s.
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        cur[i] -= 1
        rem = len(cur) - i - 1 + 1
        del cur[i + 1 :]
        cap = cur[i]
        while rem > 0:
            take = min(cap, rem)
            cur.append(take)
            rem -= take


def parse_partition(text: str) -> Partition:
    """Parse comma separated parts, tolerating whitespace and any part order."""
    body = text.strip()
    if not body:
        return Partition()
    parts = []
    for chunk in body.split(","):
        chunk = chunk.strip()
        if not chunk.isdigit():
            raise ContractViolation(f"bad partition part {chunk!r} in {text!r}")
        parts.append(int(chunk))
    if any(p < 1 for p in parts):
        raise ContractViolation(f"partition parts must be positive: {text!r}")
    return sort_to_partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    """Canonical comma separated form, e.g. '3,3,2'; empty partition is ''."""
    return ",".join(str(p) for p in lam)


def subscript(lam: Iterable[int]) -> str:
    """Compact subscript form with multiplicity exponents, e.g. (2,1,1) -> '21^2'.

    Falls back to the parenthesized comma form when any part needs two digits.
    """
    parts = tuple(lam)
    if not parts:
        return "()"
    if parts[0] > 9:
        return "(" + ",".join(str(p) for p in parts) + ")"
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        mult = j - i
        out.append(str(parts[i]) if mult == 1 else f"{parts[i]}^{mult}")
        i = j
    return "".join(out)
