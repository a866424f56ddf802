"""
Permutations of ``1..n`` in one-line notation, stored as plain tuples.

Entry positions are 1-based in the mathematical sense (``sigma[0]`` is
sigma_1), insertion slots are 0-based: slot 0 is the front, slot ``i >= 1``
is immediately after sigma_i.

>>> insert_at((1, 2), 1)
(1, 3, 2)
>>> remove_max((1, 3, 2))
((1, 2), 1)
>>> red((5, 2, 7, 8))
(2, 1, 3, 4)
"""

from __future__ import annotations

import itertools
import os
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Perm", "InvalidInput", "ResourceLimit",
    "DEFAULT_MAX_N", "max_n",
    "as_perm", "parse_perm", "format_perm", "red",
    "complement", "reverse", "insert_at", "remove_max", "rotate_to_front",
    "all_perms", "perms_starting_with",
]

# one-line notation, values 1..n
Perm = tuple[int, ...]

DEFAULT_MAX_N = 11
MAX_N_ENV = "PARITY_DESCENTS_MAX_N"


class InvalidInput(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


def max_n() -> int:
    """Enumeration cap, overridable through ``PARITY_DESCENTS_MAX_N``."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


def check_cap(n: int, cap: int | None = None) -> None:
    cap = max_n() if cap is None else cap
    if n > cap:
        raise ResourceLimit(f"n={n} exceeds the enumeration cap {cap}")


def as_perm(values: Iterable[int]) -> Perm:
    """Validate ``values`` as a permutation of 1..n and return it as a tuple."""
    p = tuple(values)
    if not p:
        raise InvalidInput("empty permutation")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidInput(f"{p} is not a permutation of 1..{len(p)}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"2 5 3 1 4"`` or ``"2,5,3,1,4"``."""
    tokens = text.replace(",", " ").split()
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise InvalidInput(f"malformed permutation {text!r}") from None
    return as_perm(values)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(map(str, p))


def red(seq: Sequence[int]) -> Perm:
    """Order-isomorphic reduction of a sequence of distinct integers."""
    if not seq:
        raise InvalidInput("red() of an empty sequence")
    if len(set(seq)) != len(seq):
        raise InvalidInput(f"red() needs distinct entries, got {tuple(seq)}")
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return tuple(rank[v] for v in seq)


def complement(p: Perm) -> Perm:
    m = len(p) + 1
    return tuple(m - v for v in p)


def reverse(p: Perm) -> Perm:
    return tuple(reversed(p))


def insert_at(p: Perm, i: int) -> Perm:
    """Insert ``n+1`` into slot ``i`` (0 = front, otherwise after p_i)."""
    if not 0 <= i <= len(p):
        raise InvalidInput(f"slot {i} out of range 0..{len(p)}")
    return p[:i] + (len(p) + 1,) + p[i:]


def remove_max(p: Perm) -> tuple[Perm, int]:
    """Inverse of :func:`insert_at`: returns ``(parent, slot)``."""
    if len(p) < 2:
        raise InvalidInput("remove_max needs n >= 2")
    i = p.index(len(p))
    return p[:i] + p[i + 1:], i


def rotate_to_front(p: Sequence[int], v: int) -> tuple[int, ...]:
    """Left cyclic rotation bringing ``v`` to the front."""
    try:
        i = list(p).index(v)
    except ValueError:
        raise InvalidInput(f"{v} does not occur in {tuple(p)}") from None
    return tuple(p[i:]) + tuple(p[:i])


def all_perms(n: int, cap: int | None = None) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    check_cap(n, cap)
    return itertools.permutations(range(1, n + 1))


def perms_starting_with(n: int, first: int) -> Iterator[Perm]:
    """The block of S_n beginning with ``first``, in lexicographic order.

    Concatenating the blocks for first = 1..n reproduces :func:`all_perms`,
    which is how enumeration is split between worker processes.
    """
    rest = [v for v in range(1, n + 1) if v != first]
    head = (first,)
    for tail in itertools.permutations(rest):
        yield head + tail
