"""Genocchi numbers from 2t/(e^t + 1), Dumont permutations, avoidance classes."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterator

from .perms import InvalidInput, Perm, check_cap
from .patterns import ParityPattern, iter_consecutive_avoiders, parse_pattern

__all__ = [
    "genocchi_series", "genocchi_sequence", "is_dumont", "iter_dumont",
    "dumont_count", "AvoidanceClass", "avoidance_patterns", "avoidance_count",
]


def genocchi_series(order: int) -> list[Fraction]:
    """Coefficients of t^0..t^order in 2t / (e^t + 1)."""
    if order < 0:
        raise InvalidInput("order must be >= 0")
    # e^t + 1
    a = [Fraction(1, math.factorial(i)) for i in range(order + 1)]
    a[0] += 1
    # 1 / (e^t + 1) by series division
    b = [Fraction(0)] * (order + 1)
    b[0] = 1 / a[0]
    for i in range(1, order + 1):
        b[i] = -sum(a[j] * b[i - j] for j in range(1, i + 1)) / a[0]
    return [Fraction(0)] + [2 * c for c in b[:order]]


def genocchi_sequence(m: int) -> list[int]:
    """``g_1..g_m``: g_i is (-1)^i (2i)! times the t^(2i) coefficient."""
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    series = genocchi_series(2 * m)
    out = []
    for i in range(1, m + 1):
        g = (-1) ** i * math.factorial(2 * i) * series[2 * i]
        if g.denominator != 1 or g <= 0:
            raise ArithmeticError(f"Genocchi extraction at order {2 * i} gave {g}")
        out.append(int(g))
    return out


def is_dumont(p: Perm) -> bool:
    """Ascent after every odd entry, descent after every even entry."""
    return all((a < b) == bool(a & 1) for a, b in zip(p, p[1:]))


def iter_dumont(n: int, cap: int | None = None) -> Iterator[Perm]:
    check_cap(n, cap)
    prefix: list[int] = []
    free = set(range(1, n + 1))

    def extend():
        if not free:
            yield tuple(prefix)
            return
        for v in sorted(free):
            if prefix:
                a = prefix[-1]
                if (a < v) != bool(a & 1):
                    continue
            prefix.append(v)
            free.discard(v)
            yield from extend()
            free.add(v)
            prefix.pop()

    return extend()


def dumont_count(n: int, cap: int | None = None) -> int:
    if n < 1 or n % 2 == 0:
        raise InvalidInput(f"Dumont counts are taken over odd n, got {n}")
    return sum(1 for _ in iter_dumont(n, cap))


class AvoidanceClass(enum.Enum):
    # avoid 1e2* and 2o1*
    DEF1 = "def1"
    # avoid 2*1e and 2e1*
    CONJ = "conj"


_CLASS_PATTERNS = {
    AvoidanceClass.DEF1: ("1e2*", "2o1*"),
    AvoidanceClass.CONJ: ("2*1e", "2e1*"),
}


def avoidance_patterns(cls: AvoidanceClass) -> tuple[ParityPattern, ...]:
    return tuple(parse_pattern(s) for s in _CLASS_PATTERNS[cls])


def avoidance_count(n: int, cls: AvoidanceClass, cap: int | None = None) -> int:
    return sum(1 for _ in iter_consecutive_avoiders(n, avoidance_patterns(cls), cap))
