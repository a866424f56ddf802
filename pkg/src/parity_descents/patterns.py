"""Parity-annotated patterns: consecutive matches and classical avoidance.

A pattern letter is a rank plus a residue constraint.  With modulus 2 the
usual shorthand applies: ``e`` (even), ``o`` (odd), ``*`` (anything), so
``2e1*`` is a descent whose top is even.  Other moduli are written
``rank%r:k``; for example ``2%2:3 1%1:3``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perms import InvalidInput, Perm, check_cap, red

__all__ = [
    "ParityPattern", "InvalidPattern",
    "parse_pattern", "format_pattern", "parity_k_pattern",
    "count_consecutive_matches", "avoids_consecutive",
    "avoids_classical", "is_parity_k_tau_avoiding_classical",
    "iter_consecutive_avoiders",
]


class InvalidPattern(InvalidInput):
    pass


@dataclass(frozen=True)
class ParityPattern:
    ranks: tuple[int, ...]
    # residue per letter, None = unconstrained
    residues: tuple[int | None, ...]
    modulus: int | None = None

    def __post_init__(self):
        if not self.ranks:
            raise InvalidPattern("empty pattern")
        if len(self.residues) != len(self.ranks):
            raise InvalidPattern("one residue constraint per letter")
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise InvalidPattern(f"ranks {self.ranks} are not a permutation")
        constrained = [r for r in self.residues if r is not None]
        if constrained:
            if self.modulus is None or self.modulus < 2:
                raise InvalidPattern("residue constraints need a modulus >= 2")
            if any(not 0 <= r < self.modulus for r in constrained):
                raise InvalidPattern(f"residues must lie in 0..{self.modulus - 1}")

    def __len__(self):
        return len(self.ranks)

    def __str__(self):
        return format_pattern(self)

    def admits(self, window: Sequence[int]) -> bool:
        """Does ``window`` (same length as the pattern) realize this pattern?"""
        k = self.modulus
        for v, r in zip(window, self.residues):
            if r is not None and v % k != r:
                return False
        if len(window) == 2:
            return (window[0] > window[1]) == (self.ranks[0] > self.ranks[1])
        return red(window) == self.ranks


_LETTER = re.compile(r"\s*(\d+)(e|o|\*|%(\d+):(\d+))")


def parse_pattern(text: str) -> ParityPattern:
    pos = 0
    ranks: list[int] = []
    residues: list[int | None] = []
    moduli = set()
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _LETTER.match(stripped, pos)
        if m is None:
            raise InvalidPattern(f"cannot parse pattern {text!r} at offset {pos}")
        ranks.append(int(m.group(1)))
        tag = m.group(2)
        if tag == "*":
            residues.append(None)
        elif tag in ("e", "o"):
            moduli.add(2)
            residues.append(0 if tag == "e" else 1)
        else:
            r, k = int(m.group(3)), int(m.group(4))
            moduli.add(k)
            residues.append(r)
        pos = m.end()
    if not ranks:
        raise InvalidPattern("empty pattern")
    if len(moduli) > 1:
        raise InvalidPattern(f"mixed moduli {sorted(moduli)} in {text!r}")
    return ParityPattern(tuple(ranks), tuple(residues), moduli.pop() if moduli else None)


def format_pattern(p: ParityPattern) -> str:
    parts = []
    for rank, r in zip(p.ranks, p.residues):
        if r is None:
            parts.append(f"{rank}*")
        elif p.modulus == 2:
            parts.append(f"{rank}{'eo'[r]}")
        else:
            parts.append(f"{rank}%{r}:{p.modulus}")
    sep = "" if p.modulus in (None, 2) else " "
    return sep.join(parts)


def parity_k_pattern(tau: Sequence[int], k: int) -> ParityPattern:
    """Pattern ``tau`` with every letter constrained to ``tau_j mod k``.

    ``k = 1`` imposes nothing and gives the plain pattern.
    """
    if k < 1:
        raise InvalidPattern(f"modulus must be >= 1, got {k}")
    tau = tuple(tau)
    if k == 1:
        return ParityPattern(tau, (None,) * len(tau))
    return ParityPattern(tau, tuple(t % k for t in tau), k)


def count_consecutive_matches(p: Perm, pattern: ParityPattern) -> int:
    m = len(pattern)
    return sum(1 for i in range(len(p) - m + 1) if pattern.admits(p[i:i + m]))


def avoids_consecutive(p: Perm, patterns: Iterable[ParityPattern]) -> bool:
    return all(count_consecutive_matches(p, pat) == 0 for pat in patterns)


def avoids_classical(p: Perm, pattern: ParityPattern) -> bool:
    """No subsequence (not necessarily consecutive) realizes ``pattern``."""
    m = len(pattern)
    return not any(pattern.admits(sub) for sub in itertools.combinations(p, m))


def is_parity_k_tau_avoiding_classical(p: Perm, tau: Sequence[int], k: int) -> bool:
    return avoids_classical(p, parity_k_pattern(tau, k))


def iter_consecutive_avoiders(n: int, patterns: Sequence[ParityPattern],
                              cap: int | None = None) -> Iterator[Perm]:
    """Permutations of S_n avoiding every pattern, in lexicographic order.

    Builds prefixes left to right and drops a prefix as soon as its last
    window matches; a match inside a prefix is a match in every completion.
    """
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    check_cap(n, cap)
    patterns = list(patterns)
    prefix: list[int] = []
    used = [False] * (n + 1)

    def ok() -> bool:
        t = len(prefix)
        for pat in patterns:
            m = len(pat)
            if m <= t and pat.admits(prefix[t - m:]):
                return False
        return True

    def extend() -> Iterator[Perm]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if ok():
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    return extend()
