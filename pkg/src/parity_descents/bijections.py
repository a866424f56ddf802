"""Executable bijections between parity-descent classes.

* :func:`bij_r_symmetry` sends top-even descents k to n - k on S_2n.
* :func:`bij_r_split` splits R_{k,2n} into an odd-starting class with k
  bottom-even descents and an even-starting class with k - 1.
* :func:`alpha` matches odd-starting permutations by bottom-even descents
  with odd-starting permutations by bottom-odd descents (same count).
* :func:`beta` matches even-starting permutations with k bottom-even
  descents to even-starting ones with k + 1 bottom-odd descents.
* :func:`bij_p_complement` sends odd-starting, k bottom-even descents to
  even-starting, n - 1 - k bottom-even descents on S_2n.

``alpha`` and ``beta`` are recursive and materialized level by level as
:class:`MatchingTable` objects.  Level ``n`` of ``alpha`` is grown from level
``n - 1`` by pairing insertion slots of the value ``n``; permutations of the
form ``(2m+1) sigma`` with ``sigma`` even-starting have no odd-starting parent
and are paired through ``beta`` at level ``2m`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .perms import InvalidInput, Perm, ResourceLimit, complement, insert_at, reverse, rotate_to_front
from .stats import DescentKind, parity_descent_count, parity_descent_set

__all__ = [
    "MatchingTable", "DEFAULT_TABLE_CAP",
    "bij_r_symmetry", "bij_r_symmetry_inv", "bij_r_split", "bij_r_split_inv",
    "alpha", "beta", "bij_p_complement", "bij_p_complement_inv",
    "right_even", "right_odd", "left_even",
]

DEFAULT_TABLE_CAP = 9


def right_even(p: Perm) -> int:
    return parity_descent_count(p, DescentKind.RIGHT_EVEN)


def right_odd(p: Perm) -> int:
    return parity_descent_count(p, DescentKind.RIGHT_ODD)


def left_even(p: Perm) -> int:
    return parity_descent_count(p, DescentKind.LEFT_EVEN)


@dataclass
class MatchingTable:
    """An explicit bijection between two finite sets of permutations."""
    n: int
    domain_stat: str
    codomain_stat: str
    forward: dict[Perm, Perm] = field(default_factory=dict)
    backward: dict[Perm, Perm] = field(default_factory=dict)

    def add(self, src: Perm, dst: Perm) -> None:
        if src in self.forward:
            raise AssertionError(f"{src} matched twice")
        if dst in self.backward:
            raise AssertionError(f"{dst} is the image of both {self.backward[dst]} and {src}")
        self.forward[src] = dst
        self.backward[dst] = src

    def __call__(self, p: Perm) -> Perm:
        try:
            return self.forward[tuple(p)]
        except KeyError:
            raise InvalidInput(f"{tuple(p)} is not in the domain of this matching") from None

    def inverse(self, p: Perm) -> Perm:
        try:
            return self.backward[tuple(p)]
        except KeyError:
            raise InvalidInput(f"{tuple(p)} is not in the codomain of this matching") from None

    def __len__(self):
        return len(self.forward)

    def __iter__(self) -> Iterator[tuple[Perm, Perm]]:
        return iter(sorted(self.forward.items()))

    def by_statistic(self, stat: Callable[[Perm], int], side: str = "domain") -> dict[int, int]:
        """Class sizes of one side keyed by ``stat``."""
        keys = self.forward if side == "domain" else self.backward
        sizes: dict[int, int] = {}
        for p in keys:
            s = stat(p)
            sizes[s] = sizes.get(s, 0) + 1
        return sizes


def _check_even(p: Perm) -> int:
    if len(p) % 2:
        raise InvalidInput(f"expected a permutation of even length, got length {len(p)}")
    return len(p)


# -- top-even symmetry and the R/P split -----------------------------------------

def bij_r_symmetry(p: Perm) -> Perm:
    """Append 2n+1, complement, rotate 2n+1 to the front, drop it."""
    big = _check_even(p) + 1
    return rotate_to_front(complement(p + (big,)), big)[1:]


def bij_r_symmetry_inv(p: Perm) -> Perm:
    big = _check_even(p) + 1
    s = (big,) + tuple(p)
    i = s.index(1)
    # right cyclic shift until 1 is last
    s = s[i + 1:] + s[:i + 1]
    return complement(s)[:-1]


def bij_r_split(p: Perm) -> tuple[str, Perm]:
    """Returns ``("P0", pi)`` (odd start, same bottom-even count as p's
    top-even count) or ``("P1", pi)`` (even start, one fewer)."""
    big = _check_even(p) + 1
    pi = rotate_to_front(reverse(complement(p + (big,))), big)[1:]
    return ("P0" if pi[0] & 1 else "P1"), pi


def bij_r_split_inv(pi: Perm) -> Perm:
    big = _check_even(pi) + 1
    s = rotate_to_front((big,) + tuple(pi), 1)
    return reverse(complement(s))[:-1]


# -- alpha and beta ----------------------------------------------------------------

def _check_table_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_TABLE_CAP if cap is None else cap
    if n > cap:
        raise ResourceLimit(f"matching tables are capped at n={cap}, asked for {n}")


def _descent_slots(p: Perm, kind: DescentKind) -> list[int]:
    return sorted(parity_descent_set(p, kind))


def _alpha_slots(sigma: Perm, pi: Perm) -> list[tuple[list[int], list[int]]]:
    """Matched groups of insertion slots for the next value ``len + 1``.

    A slot ``i`` inserts after entry i, i.e. before ``p[i]`` (0-based).
    """
    m = len(sigma)
    des_s = set(parity_descent_set(sigma, DescentKind.RIGHT_EVEN))
    des_p = set(parity_descent_set(pi, DescentKind.RIGHT_ODD))
    ends = ([m], [m])
    descents = (sorted(des_s), sorted(des_p))
    if m % 2 == 0:
        # inserting an odd value
        before_odd_s = [i for i in range(m) if sigma[i] & 1]
        before_even_p = [j for j in range(m) if not pi[j] & 1]
        rising_s = [i for i in range(m) if not sigma[i] & 1 and i not in des_s]
        rising_p = [j for j in range(m) if pi[j] & 1 and j not in des_p]
    else:
        # inserting an even value; slot 0 would leave the odd-starting world
        before_odd_s = [i for i in range(m) if sigma[i] & 1][1:]
        before_even_p = [j for j in range(m) if not pi[j] & 1]
        rising_s = [i for i in range(m) if not sigma[i] & 1 and i not in des_s]
        rising_p = [j for j in range(m) if pi[j] & 1 and j not in des_p][1:]
    return [ends, descents, (before_odd_s, before_even_p), (rising_s, rising_p)]


@lru_cache(maxsize=None)
def _alpha(n: int) -> MatchingTable:
    table = MatchingTable(n, "right_even", "right_odd")
    if n == 1:
        table.add((1,), (1,))
        return table
    if n == 2:
        table.add((1, 2), (1, 2))
        return table
    parent = _alpha(n - 1)
    for sigma, pi in parent:
        for slots_s, slots_p in _alpha_slots(sigma, pi):
            if len(slots_s) != len(slots_p):
                raise AssertionError(f"slot groups of {sigma} and {pi} differ in size")
            for i, j in zip(slots_s, slots_p):
                table.add(insert_at(sigma, i), insert_at(pi, j))
    if n % 2 == 1:
        # n sigma with sigma even-starting has no odd-starting parent
        for sigma, tau in _beta(n - 1):
            table.add((n,) + sigma, (n,) + tau)
    for sigma, pi in table.forward.items():
        if not (sigma[0] & 1 and pi[0] & 1 and right_even(sigma) == right_odd(pi)):
            raise AssertionError(f"alpha pairs {sigma} with {pi}, breaking its statistic")
    return table


def _insert_zero(p: Perm, i: int) -> Perm:
    """Insert 0 after entry i, then shift every value up by one."""
    return tuple(v + 1 for v in p[:i] + (0,) + p[i:])


@lru_cache(maxsize=None)
def _beta(n: int) -> MatchingTable:
    table = MatchingTable(n, "right_even", "right_odd")
    if n == 1:
        return table
    for sigma, pi in _alpha(n - 1):
        m = len(sigma)
        des_s = _descent_slots(sigma, DescentKind.RIGHT_EVEN)
        des_p = _descent_slots(pi, DescentKind.RIGHT_ODD)
        flat_s = [i for i in range(1, m + 1) if i not in des_s]
        flat_p = [j for j in range(1, m + 1) if j not in des_p]
        for i, j in zip(des_s + flat_s, des_p + flat_p):
            table.add(_insert_zero(pi, j), _insert_zero(sigma, i))
    for delta, tau in table.forward.items():
        if not (delta[0] % 2 == 0 and tau[0] % 2 == 0 and right_odd(tau) == right_even(delta) + 1):
            raise AssertionError(f"beta pairs {delta} with {tau}, breaking its statistic")
    return table


def alpha(n: int, cap: int | None = None) -> MatchingTable:
    """Odd-starting S_n: bottom-even descents -> bottom-odd descents."""
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    _check_table_cap(n, cap)
    return _alpha(n)


def beta(n: int, cap: int | None = None) -> MatchingTable:
    """Even-starting S_n: k bottom-even descents -> k + 1 bottom-odd descents."""
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    _check_table_cap(n, cap)
    return _beta(n)


# -- odd-start / even-start complement symmetry ------------------------------------

def bij_p_complement(p: Perm, cap: int | None = None) -> Perm:
    size = _check_even(p)
    if not p[0] & 1:
        raise InvalidInput(f"{p} must start with an odd value")
    pi3 = alpha(size, cap)(p)
    # invert the chain: prepend 2n+1, complement, drop the 1, shift down
    pi2 = (1,) + tuple(v + 1 for v in pi3)
    return complement(pi2)[1:]


def bij_p_complement_inv(p: Perm, cap: int | None = None) -> Perm:
    size = _check_even(p)
    if p[0] & 1:
        raise InvalidInput(f"{p} must start with an even value")
    pi2 = complement((size + 1,) + tuple(p))
    pi3 = tuple(v - 1 for v in pi2[1:])
    return alpha(size, cap).inverse(pi3)
