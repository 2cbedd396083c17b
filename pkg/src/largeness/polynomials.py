"""Integral polynomials with zero constant term.

All arithmetic is on Python ints, so evaluation is exact at any magnitude.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError


@dataclass(frozen=True)
class Polynomial:
    """Dense integer polynomial ``c0 + c1 n + ... + ck n^k``.

    Used for derivatives and other intermediate results where a constant
    term is allowed. Trailing zeros are stripped; the zero polynomial has
    ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        a = a + (0,) * (k - len(a))
        b = b + (0,) * (k - len(b))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))


@dataclass(frozen=True)
class IntPolynomial:
    """``a_1 n + a_2 n^2 + ... + a_l n^l`` with ``a_l != 0``.

    ``coeffs[i]`` is the coefficient of ``n^(i+1)``; the constant term is
    zero and not stored.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise PreconditionError("polynomial must be nonzero")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_powers(cls, powers: dict[int, int]) -> IntPolynomial:
        if any(k < 1 for k in powers):
            raise PreconditionError("only positive powers allowed (p(0) = 0)")
        top = max(powers)
        return cls(tuple(powers.get(i, 0) for i in range(1, top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def __call__(self, n: int) -> int:
        return eval_poly(self, n)

    def dense(self) -> Polynomial:
        return Polynomial((0,) + self.coeffs)

    def plus_identity(self) -> IntPolynomial:
        """The polynomial ``p(n) + n``; every diagonal construction uses it."""
        cs = list(self.coeffs)
        cs[0] += 1
        if all(c == 0 for c in cs):
            raise PreconditionError("p(n) + n is identically zero")
        return IntPolynomial(tuple(cs))

    def __str__(self) -> str:
        parts = []
        for power in range(self.degree, 0, -1):
            c = self.coeffs[power - 1]
            if c == 0:
                continue
            mono = "n" if power == 1 else f"n^{power}"
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> IntPolynomial:
        try:
            return cls(tuple(int(c) for c in obj["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial JSON: {obj!r}") from exc


def eval_poly(p: IntPolynomial, n: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = (acc + c) * n
    return acc


def derivative(p: IntPolynomial) -> Polynomial:
    return p.dense().derivative()


def _cauchy_bound(q: Polynomial) -> int:
    """Integer B with every real root of ``q`` strictly below B in absolute value."""
    if q.degree <= 0:
        return 0
    lead = abs(q.lead)
    top = max(abs(c) for c in q.coeffs[:-1])
    return 1 + -(-top // lead)


def monotone_threshold(p: IntPolynomial) -> int:
    """Smallest ``M >= 0`` with ``p(n+1) > p(n)`` for every integer ``n >= M``.

    Beyond the Cauchy root bound of ``p'`` the derivative is positive, so
    only the integers below that bound are scanned.
    """
    if p.lead <= 0:
        raise PreconditionError("monotone_threshold needs a positive leading coefficient")
    bound = _cauchy_bound(derivative(p))
    m = bound
    while m > 0 and eval_poly(p, m) > eval_poly(p, m - 1):
        m -= 1
    return m


def choose_shift_exponent(p: IntPolynomial) -> int:
    """Smallest ``N >= 1`` such that ``2**N >= monotone_threshold(p)``."""
    threshold = monotone_threshold(p)
    n = 1
    while (1 << n) < threshold:
        n += 1
    return n


_TERM = re.compile(r"^([+-]?)(\d*)\*?n(?:\^(\d+))?$")
_CONST = re.compile(r"^[+-]?\d+$")


def parse_poly(expr: str) -> IntPolynomial:
    """Parse shorthand like ``"n^2"``, ``"n^3-300n"`` or ``"2n^2 - n"``.

    Only integer monomial sums in ``n`` with zero constant term are accepted.
    """
    s = expr.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial expression")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"cannot parse polynomial {expr!r}")
    powers: dict[int, int] = {}
    for term in terms:
        m = _TERM.match(term)
        if m is None:
            if _CONST.match(term):
                raise ParseError(f"constant term {term!r} not allowed: p(0) must be 0")
            raise ParseError(f"cannot parse term {term!r} in {expr!r}")
        sign, coeff, power = m.groups()
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        k = int(power) if power else 1
        if k < 1:
            raise ParseError(f"term {term!r} has power 0")
        powers[k] = powers.get(k, 0) + c
    if all(c == 0 for c in powers.values()):
        raise ParseError(f"{expr!r} is the zero polynomial")
    return IntPolynomial.from_powers(powers)


def as_poly(p: IntPolynomial | str | Sequence[int]) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, str):
        return parse_poly(p)
    return IntPolynomial(tuple(p))


def as_polys(ps: Iterable[IntPolynomial | str | Sequence[int]]) -> list[IntPolynomial]:
    return [as_poly(p) for p in ps]
