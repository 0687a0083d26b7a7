"""Small combinatorial helpers shared across modules."""

from __future__ import annotations

import math
from collections import Counter


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def distinct_permutations(values):
    """All distinct permutations of a multiset, in lexicographic order."""
    counts = Counter(values)
    keys = sorted(counts)
    n = len(tuple(values))
    out: list[tuple] = []
    cur: list = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                cur.append(v)
                rec()
                cur.pop()
                counts[v] += 1

    rec()
    return out


def orbit_size(values) -> int:
    """Number of distinct permutations of a multiset."""
    counts = Counter(values)
    n = sum(counts.values())
    size = math.factorial(n)
    for c in counts.values():
        size //= math.factorial(c)
    return size


def is_submultiset(sub, sup) -> bool:
    """Multiset inclusion for sorted tuples."""
    i = 0
    for x in sup:
        if i < len(sub) and sub[i] == x:
            i += 1
    return i == len(sub)


def ascending_tuples_capped(length: int, cap: int, total_cap: int):
    """All nondecreasing tuples with entries in [1, cap] and sum <= total_cap."""
    out: list[tuple[int, ...]] = []
    cur: list[int] = []

    def rec(pos: int, last: int, remaining: int):
        if pos == length:
            out.append(tuple(cur))
            return
        need_after = length - pos - 1
        for v in range(last, cap + 1):
            if v + need_after * v > remaining:
                break
            cur.append(v)
            rec(pos + 1, v, remaining - v)
            cur.pop()

    rec(0, 1, total_cap)
    return out
