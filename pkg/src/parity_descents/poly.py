"""Sparse exact polynomials in x and z and the insertion operators.

Every operator is a table of monomial actions: the image of ``z^j x^k`` is a
list of ``(coefficient(h, k), target zdeg, x shift)`` terms, where ``h`` is
half the size index (``h = n`` for both the ``2n`` and ``2n+1`` operators).
"""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .perms import InvalidInput
from .stats import Family

__all__ = [
    "BivariatePolynomial", "Poly", "OperatorId", "OperatorDomainError",
    "apply_operator", "family_poly", "family_table", "eval_z",
    "differential_step", "differential_form_check", "parse_poly",
]

Key = tuple[int, int]  # (zdeg, xdeg)


class OperatorDomainError(ValueError):
    pass


class BivariatePolynomial:
    """Immutable map ``(zdeg, xdeg) -> nonzero int``."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        c: dict[Key, int] = {}
        for (z, x), v in items:
            if z < 0 or x < 0:
                raise InvalidInput(f"negative exponent in monomial z^{z} x^{x}")
            c[z, x] = c.get((z, x), 0) + v
        self._c = {k: v for k, v in sorted(c.items()) if v}

    @classmethod
    def monomial(cls, coef: int = 1, z: int = 0, x: int = 0) -> "BivariatePolynomial":
        return cls({(z, x): coef})

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    # -- access --------------------------------------------------------------

    def coefficient(self, z: int, x: int) -> int:
        return self._c.get((z, x), 0)

    def items(self):
        """Terms ordered by zdeg, then xdeg."""
        return self._c.items()

    def as_dict(self) -> dict[Key, int]:
        return dict(self._c)

    @property
    def zdeg(self) -> int:
        return max((z for z, _ in self._c), default=0)

    @property
    def xdeg(self) -> int:
        return max((x for _, x in self._c), default=0)

    def is_zero(self) -> bool:
        return not self._c

    def total(self) -> int:
        """Value at x = z = 1."""
        return sum(self._c.values())

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __add__(self, other):
        other = _promote(other)
        return BivariatePolynomial(list(self._c.items()) + list(other._c.items()))

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_promote(other))

    def __rsub__(self, other):
        return _promote(other) - self

    def __mul__(self, other):
        other = _promote(other)
        out: dict[Key, int] = {}
        for (z1, x1), a in self._c.items():
            for (z2, x2), b in other._c.items():
                k = (z1 + z2, x1 + x2)
                out[k] = out.get(k, 0) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def d_dx(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(z, x - 1): x * v for (z, x), v in self._c.items() if x})

    def d_dz(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(z - 1, x): z * v for (z, x), v in self._c.items() if z})

    # -- display -------------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(_format_term(z, x, v) for (z, x), v in self._c.items()).replace("+ -", "- ")

    def __repr__(self):
        return f"BivariatePolynomial({self._c!r})"


Poly = BivariatePolynomial

X = Poly.monomial(1, 0, 1)
Z = Poly.monomial(1, 1, 0)
ONE = Poly.constant(1)


def _promote(v) -> BivariatePolynomial:
    if isinstance(v, BivariatePolynomial):
        return v
    if isinstance(v, int):
        return BivariatePolynomial.constant(v)
    raise TypeError(f"cannot combine a polynomial with {type(v).__name__}")


def _format_term(z: int, x: int, v: int) -> str:
    mono = ""
    if z:
        mono += "z" if z == 1 else f"z^{z}"
    if x:
        mono += "x" if x == 1 else f"x^{x}"
    if not mono:
        return str(v)
    if v == 1:
        return mono
    if v == -1:
        return "-" + mono
    return f"{v}{mono}"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*((?:[xz](?:\^\d+)?)*)")
_VAR = re.compile(r"([xz])(?:\^(\d+))?")


def parse_poly(text: str) -> BivariatePolynomial:
    """Parse sums such as ``"576+ 2304z +6912x + 6192zx^2 + 10368x^2z"``."""
    s = text.replace(" ", "")
    if not s:
        raise InvalidInput("empty polynomial")
    terms = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise InvalidInput(f"cannot parse polynomial {text!r} at offset {pos}")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coef = -coef
        z = x = 0
        for var, exp in _VAR.findall(m.group(3)):
            e = int(exp) if exp else 1
            if var == "z":
                z += e
            else:
                x += e
        terms.append(((z, x), coef))
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise InvalidInput(f"cannot parse polynomial {text!r} at offset {pos}")
    return BivariatePolynomial(terms)


# -- insertion operators -------------------------------------------------------

class OperatorId(enum.Enum):
    DELTA = "delta"
    GAMMA = "gamma"
    THETA = "theta"
    OMEGA = "omega"
    PHI = "phi"
    PSI = "psi"
    XI = "xi"


Coef = Callable[[int, int], int]
Action = list[tuple[Coef, int, int]]  # (coefficient(h, k), target zdeg, x shift)

_ONE: Coef = lambda h, k: 1

OPERATOR_TABLE: dict[OperatorId, dict[int, Action]] = {
    OperatorId.DELTA: {
        0: [(lambda h, k: k, 0, -1), (lambda h, k: 2 * h + 1 - k, 0, 0)],
    },
    OperatorId.GAMMA: {
        0: [(lambda h, k: k + 1, 0, 0), (lambda h, k: 2 * h + 1 - k, 0, 1)],
    },
    OperatorId.THETA: {
        0: [(lambda h, k: h + k + 1, 0, 0), (lambda h, k: h - k, 0, 1)],
        1: [(lambda h, k: h + k + 1, 1, 0), (_ONE, 0, 1), (lambda h, k: h - k - 1, 1, 1)],
    },
    OperatorId.OMEGA: {
        0: [(lambda h, k: h + k + 1, 0, 0), (_ONE, 1, 0), (lambda h, k: h - k, 0, 1)],
        1: [(lambda h, k: h + k + 2, 1, 0), (lambda h, k: h - k, 1, 1)],
    },
    OperatorId.PHI: {
        0: [(_ONE, 1, 0), (lambda h, k: h + k, 0, 0), (lambda h, k: h - k, 0, 1)],
        1: [(lambda h, k: h + k + 1, 1, 0), (lambda h, k: h - k, 1, 1)],
    },
    OperatorId.PSI: {
        0: [(lambda h, k: h + k + 1, 0, 0), (lambda h, k: h - k + 1, 0, 1)],
        1: [(lambda h, k: h + k + 1, 1, 0), (_ONE, 0, 1), (lambda h, k: h - k, 1, 1)],
    },
    OperatorId.XI: {
        0: [(_ONE, 1, 0)],
        1: [(_ONE, 0, 1)],
    },
}

_EVEN_INDEXED = {OperatorId.DELTA, OperatorId.THETA, OperatorId.PHI}
_ODD_INDEXED = {OperatorId.GAMMA, OperatorId.OMEGA, OperatorId.PSI}


def apply_operator(op: OperatorId, size_param: int | None, poly: BivariatePolynomial) -> BivariatePolynomial:
    """Linear extension of ``op``'s monomial action.

    ``size_param`` is the operator's index (2n for DELTA/THETA/PHI, 2n+1 for
    GAMMA/OMEGA/PSI) and is ignored for XI.
    """
    table = OPERATOR_TABLE[op]
    if op is OperatorId.XI:
        h = 0
    else:
        if size_param is None or size_param < 1:
            raise OperatorDomainError(f"{op.name} needs a positive size index")
        if op in _EVEN_INDEXED and size_param % 2:
            raise OperatorDomainError(f"{op.name} is indexed by an even size, got {size_param}")
        if op in _ODD_INDEXED and size_param % 2 == 0:
            raise OperatorDomainError(f"{op.name} is indexed by an odd size, got {size_param}")
        h = size_param // 2
    out: dict[Key, int] = {}
    for (z, k), v in poly.items():
        action = table.get(z)
        if action is None:
            raise OperatorDomainError(f"{op.name} is not defined on z^{z} terms")
        for coef, tz, dx in action:
            c = coef(h, k)
            if c:
                key = (tz, k + dx)
                out[key] = out.get(key, 0) + c * v
    return BivariatePolynomial(out)


# (operator from even size, operator from odd size, P_1, P_2)
_RECURSION = {
    Family.R: (OperatorId.DELTA, OperatorId.GAMMA, ONE, ONE + X),
    Family.P: (OperatorId.THETA, OperatorId.OMEGA, ONE, ONE + Z),
    Family.Q: (OperatorId.PHI, OperatorId.PSI, Z, Z + X),
}


def step_operator(family: Family, size: int) -> OperatorId:
    """Operator carrying the family polynomial of ``size`` to ``size + 1``."""
    even_op, odd_op, _, _ = _RECURSION[family]
    return even_op if size % 2 == 0 else odd_op


@lru_cache(maxsize=None)
def _recursive_table(family: Family, n: int) -> tuple[BivariatePolynomial, ...]:
    _, _, first, second = _RECURSION[family]
    if n <= 2:
        return (first, second)[:n]
    prev = _recursive_table(family, n - 1)
    m = n - 1
    return prev + (apply_operator(step_operator(family, m), m, prev[-1]),)


def family_poly(family: Family, n: int) -> BivariatePolynomial:
    """R_n, P_n, Q_n by operator recursion; M_n assembled from P and Q."""
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    if family is Family.M:
        src = Family.P if n % 2 == 0 else Family.Q
        return eval_z(_recursive_table(src, n)[n - 1], 1)
    return _recursive_table(family, n)[n - 1]


def family_table(family: Family, n_max: int) -> list[BivariatePolynomial]:
    return [family_poly(family, n) for n in range(1, n_max + 1)]


def eval_z(poly: BivariatePolynomial, z0: int) -> BivariatePolynomial:
    return BivariatePolynomial([((0, x), v * z0 ** z) for (z, x), v in poly.items()])


# -- differential forms ----------------------------------------------------------

def _differential_coefficients(family: Family, size: int):
    """``(A, B, C)`` with next = A * dP/dx + B * dP/dz + C * P."""
    h = size // 2
    x_1mx = X - X * X
    if family is Family.R:
        if size % 2 == 0:
            return ONE - X, Poly(), Poly.constant(1 + 2 * h)
        return x_1mx, Poly(), ONE + (1 + 2 * h) * X
    if family is Family.P:
        if size % 2 == 0:
            return x_1mx, X - X * Z, (1 + h) + h * X
        return x_1mx, Z - Z * Z, (1 + h) + Z + h * X
    if family is Family.Q:
        if size % 2 == 0:
            return x_1mx, Z - Z * Z, Z + h + h * X
        return x_1mx, X - X * Z, (1 + h) * (ONE + X)
    raise InvalidInput(f"no differential form for family {family.name}")


def differential_step(family: Family, size: int, poly: BivariatePolynomial) -> BivariatePolynomial:
    a, b, c = _differential_coefficients(family, size)
    return a * poly.d_dx() + b * poly.d_dz() + c * poly


def differential_form_check(family: Family, n: int) -> bool:
    """Step ``n-1 -> n`` via the operator and via the differential form agree."""
    if n < 2:
        raise InvalidInput("differential forms start at n = 2")
    prev = family_poly(family, n - 1)
    by_operator = apply_operator(step_operator(family, n - 1), n - 1, prev)
    return by_operator == differential_step(family, n - 1, prev)
