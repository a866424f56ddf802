"""Closed-form coefficients of R_n, P_n, Q_n and M_n.

Binomials with out-of-range arguments are 0, so every formula is total in
``k``; queries outside a polynomial's support return 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .perms import InvalidInput
from .poly import BivariatePolynomial
from .stats import Family

__all__ = [
    "CoefficientQuery", "coeff", "closed_form_poly", "binom", "fact",
    "alternate_forms",
]


@lru_cache(maxsize=None)
def fact(n: int) -> int:
    return math.factorial(n)


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class CoefficientQuery:
    family: Family
    k: int
    n: int
    j: int | None = None  # zdeg, only for P and Q

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"n must be >= 1, got {self.n}")
        if self.family.bivariate:
            if self.j not in (0, 1):
                raise InvalidInput(f"{self.family.name} coefficients need j in {{0, 1}}")
        elif self.j not in (None, 0):
            raise InvalidInput(f"{self.family.name} has no z-degree")


def _r(k: int, size: int) -> int:
    n, odd = divmod(size, 2)
    f2 = fact(n) ** 2
    if not odd:
        return binom(n, k) ** 2 * f2
    return (k + 1) * binom(n, k + 1) ** 2 * f2 + (2 * n + 1 - k) * binom(n, k) ** 2 * f2


def _p(j: int, k: int, size: int) -> int:
    n, odd = divmod(size, 2)
    f2 = fact(n) ** 2
    if not odd:
        if j == 0:
            return binom(n - 1, k) * binom(n, k) * f2
        return binom(n - 1, k) * binom(n, k + 1) * f2
    if j == 0:
        return (k + 1) * binom(n, k) * binom(n + 1, k + 1) * f2
    # (n+1)(n-k)/(k+1) * C(n,k)^2 with (n-k)/(k+1) * C(n,k) = C(n,k+1)
    return (n + 1) * binom(n, k) * binom(n, k + 1) * f2


def _q(j: int, k: int, size: int) -> int:
    n, odd = divmod(size, 2)
    f2 = fact(n) ** 2
    if not odd:
        if j == 0:
            return binom(n - 1, k - 1) * binom(n, k) * f2
        return binom(n - 1, k) * binom(n, k) * f2
    if j == 0:
        # (n+1)(n-k+1)/k * C(n,k-1)^2 with (n-k+1)/k * C(n,k-1) = C(n,k)
        return (n + 1) * binom(n, k) * binom(n, k - 1) * f2
    return binom(n, k) ** 2 * fact(n) * fact(n + 1)


def _m(k: int, size: int) -> int:
    n, odd = divmod(size, 2)
    if not odd:
        return binom(n - 1, k) * binom(n + 1, k + 1) * fact(n) ** 2
    return binom(n, k) * binom(n + 1, k) * fact(n) * fact(n + 1)


def coeff(q: CoefficientQuery) -> int:
    if q.k < 0 or q.k > q.n:
        return 0
    if q.family is Family.R:
        return _r(q.k, q.n)
    if q.family is Family.M:
        return _m(q.k, q.n)
    if q.family is Family.P:
        return _p(q.j, q.k, q.n)
    return _q(q.j, q.k, q.n)


def closed_form_poly(family: Family, n: int) -> BivariatePolynomial:
    js = (0, 1) if family.bivariate else (None,)
    terms = {}
    for j in js:
        for k in range(n + 1):
            v = coeff(CoefficientQuery(family, k, n, j))
            if v:
                terms[(j or 0, k)] = v
    return BivariatePolynomial(terms)


def alternate_forms(family: Family, k: int, size: int, j: int | None = None) -> list[Fraction]:
    """Every printed rational form of one coefficient, evaluated exactly.

    Forms whose denominator vanishes at ``k`` are skipped; the caller checks
    that all returned values coincide (and with :func:`coeff`).
    """
    if not 0 <= k <= size:
        raise InvalidInput(f"k={k} outside 0..{size}")
    n, odd = divmod(size, 2)
    f2 = Fraction(fact(n) ** 2)
    out: list[Fraction] = []

    def add(num, den=1):
        if den:
            out.append(Fraction(num) / den)

    if family is Family.R:
        if odd:
            add((k + 1) * binom(n, k + 1) ** 2 * f2 + (2 * n + 1 - k) * binom(n, k) ** 2 * f2)
            add(binom(n, k) ** 2 * fact(n + 1) ** 2, k + 1)
        else:
            add(binom(n, k) ** 2 * f2)
    elif family is Family.P:
        if not odd:
            add((binom(n - 1, k) * binom(n, k + 1) if j else binom(n - 1, k) * binom(n, k)) * f2)
        elif j == 0:
            add((k + 1) * binom(n, k) * binom(n + 1, k + 1) * f2)
            add((n + 1) * binom(n, k) ** 2 * f2)
        else:
            add((n + 1) * (n - k) * binom(n, k) ** 2 * f2, k + 1)
            # R_{k,2n+1} - P_{0,k,2n+1}
            add(Fraction(binom(n, k) ** 2 * fact(n + 1) ** 2, k + 1) - (n + 1) * binom(n, k) ** 2 * f2)
    elif family is Family.Q:
        if not odd:
            add((binom(n - 1, k - 1) * binom(n, k) if j == 0 else binom(n - 1, k) * binom(n, k)) * f2)
        elif j == 0:
            add((n + 1) * (n - k + 1) * binom(n, k - 1) ** 2 * f2, k)
        else:
            add(binom(n, k) ** 2 * fact(n) * fact(n + 1))
    else:
        if not odd:
            add((n + 1) * binom(n - 1, k) * binom(n, k) * f2, k + 1)
            add(binom(n - 1, k) * binom(n + 1, k + 1) * f2)
        else:
            add(binom(n, k) ** 2 * fact(n + 1) ** 2, n - k + 1)
            add(binom(n, k) * binom(n + 1, k) * fact(n) * fact(n + 1))
    return out
