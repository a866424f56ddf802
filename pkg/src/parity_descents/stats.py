"""Parity-refined descent statistics.

A descent ``i`` (with ``p_i > p_{i+1}``) is *left*-X when its top ``p_i`` has
parity X and *right*-X when its bottom ``p_{i+1}`` does.  Positions are
1-based.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .perms import Perm

__all__ = [
    "Parity", "DescentKind", "Family", "DescentProfile",
    "parity_descent_set", "parity_descent_count", "first_parity_flag",
    "descent_profile", "family_monomial",
]


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, v: int) -> "Parity":
        return cls(v & 1)


E = Parity.EVEN
O = Parity.ODD


class DescentKind(enum.Enum):
    LEFT_EVEN = "left_even"
    RIGHT_EVEN = "right_even"
    LEFT_ODD = "left_odd"
    RIGHT_ODD = "right_odd"
    PLAIN = "plain"


class Family(enum.Enum):
    """The four distribution polynomials.

    R: top-even descents.  P: bottom-even descents, z marks an even first
    letter.  Q: bottom-odd descents, z marks an odd first letter.
    M: top-odd descents.
    """
    R = "R"
    P = "P"
    Q = "Q"
    M = "M"

    @property
    def bivariate(self) -> bool:
        return self in (Family.P, Family.Q)


# kind -> (look at top?, required parity); None parity means unrestricted
_FILTER = {
    DescentKind.LEFT_EVEN: (True, E),
    DescentKind.LEFT_ODD: (True, O),
    DescentKind.RIGHT_EVEN: (False, E),
    DescentKind.RIGHT_ODD: (False, O),
    DescentKind.PLAIN: (True, None),
}


def parity_descent_set(p: Perm, kind: DescentKind) -> set[int]:
    use_top, parity = _FILTER[kind]
    out = set()
    for i in range(len(p) - 1):
        a, b = p[i], p[i + 1]
        if a > b and (parity is None or ((a if use_top else b) & 1) == parity):
            out.add(i + 1)
    return out


def parity_descent_count(p: Perm, kind: DescentKind) -> int:
    return len(parity_descent_set(p, kind))


def first_parity_flag(p: Perm, parity: Parity) -> int:
    return 1 if (p[0] & 1) == parity else 0


class DescentProfile(NamedTuple):
    left_even: int
    left_odd: int
    right_even: int
    right_odd: int
    first_odd: int


def descent_profile(p: Perm) -> DescentProfile:
    """All four parity descent counts and the first-letter parity, one scan."""
    le = lo = re = ro = 0
    a = p[0]
    for b in p[1:]:
        if a > b:
            if a & 1:
                lo += 1
            else:
                le += 1
            if b & 1:
                ro += 1
            else:
                re += 1
        a = b
    return DescentProfile(le, lo, re, ro, p[0] & 1)


def family_monomial(profile: DescentProfile, family: Family) -> tuple[int, int]:
    """``(zdeg, xdeg)`` contributed by a permutation to a family polynomial."""
    if family is Family.R:
        return 0, profile.left_even
    if family is Family.M:
        return 0, profile.left_odd
    if family is Family.P:
        return 1 - profile.first_odd, profile.right_even
    return profile.first_odd, profile.right_odd
