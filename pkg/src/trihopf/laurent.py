"""Laurent polynomials in one variable ``q`` over the integers.

Coefficients are Python ints, so nothing overflows. Values are immutable;
the zero polynomial is the empty term tuple, which makes ``==`` structural.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "lp_add",
    "lp_mul",
    "lp_shift",
    "lp_bar",
    "lp_eval_one",
    "parse_text",
]


@dataclass(frozen=True)
class LaurentPoly:
    """Sum of ``c * q^e`` over ``terms``, stored by strictly decreasing exponent.

    >>> LaurentPoly.from_dict({0: 1, -2: 1}) * LaurentPoly.from_dict({0: 1, -2: 1})
    LaurentPoly('1 + 2*q^-2 + q^-4')
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        prev = None
        for e, c in self.terms:
            if c == 0:
                raise ValueError("zero coefficient stored at exponent %d" % e)
            if e in seen or (prev is not None and e >= prev):
                raise ValueError("exponents must be unique and strictly decreasing")
            seen.add(e)
            prev = e

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple((int(e), int(c)) for e, c in sorted(d.items(), reverse=True) if c))

    @classmethod
    def monomial(cls, e: int = 0, c: int = 1) -> "LaurentPoly":
        return cls(((e, c),)) if c else cls()

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    def to_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, e: int) -> int:
        for ee, c in self.terms:
            if ee == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Top exponent; ``None`` for zero."""
        return self.terms[0][0] if self.terms else None

    def valuation(self):
        """Bottom exponent; ``None`` for zero."""
        return self.terms[-1][0] if self.terms else None

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return lp_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return lp_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return lp_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return LaurentPoly.monomial(-e * (-n), c ** (-n))
            raise ValueError("only unit monomials are invertible")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate at ``x``; negative powers use ``x ** e`` so pass a Fraction for exact rationals."""
        return sum((c * x**e for e, c in self.terms), 0)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return "LaurentPoly(%r)" % to_text(self)

    def to_json(self) -> dict:
        return {"terms": [[e, str(c)] for e, c in self.terms]}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        d: dict[int, int] = {}
        for e, c in obj["terms"]:
            d[int(e)] = d.get(int(e), 0) + int(c)
        return cls.from_dict(d)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    d = dict(a.terms)
    for e, c in b.terms:
        d[e] = d.get(e, 0) + c
    return LaurentPoly.from_dict(d)


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    d: dict[int, int] = {}
    for p in polys:
        for e, c in p.terms:
            d[e] = d.get(e, 0) + c
    return LaurentPoly.from_dict(d)


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.terms or not b.terms:
        return ZERO
    d: dict[int, int] = {}
    for e1, c1 in a.terms:
        for e2, c2 in b.terms:
            e = e1 + e2
            d[e] = d.get(e, 0) + c1 * c2
    return LaurentPoly.from_dict(d)


def lp_shift(a: LaurentPoly, e: int) -> LaurentPoly:
    """Multiply by ``q^e``."""
    return LaurentPoly(tuple((ee + e, c) for ee, c in a.terms))


def lp_bar(a: LaurentPoly) -> LaurentPoly:
    """Substitute ``q -> q^-1``."""
    return LaurentPoly(tuple((-e, c) for e, c in reversed(a.terms)))


def lp_eval_one(a: LaurentPoly) -> int:
    return sum(c for _, c in a.terms)


def _term_text(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    mono = "q^%d" % e
    return mono if c == 1 else "%d*%s" % (c, mono)


def to_text(a: LaurentPoly) -> str:
    """Canonical text form, e.g. ``1 + q^-2 + 2*q^-4``."""
    if not a.terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(a.terms):
        body = _term_text(e, abs(c))
        if idx == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


_TERM_RE = re.compile(r"^(?:(\d+)\*)?q\^(-?\d+)$|^(\d+)$")


def parse_text(s: str) -> LaurentPoly:
    """Inverse of :func:`to_text`; also tolerates non-canonical term order.

    >>> parse_text("1 + q^-2 + 2*q^-4") == LaurentPoly.from_dict({0: 1, -2: 1, -4: 2})
    True
    """
    s = s.strip()
    if s == "0":
        return ZERO
    tokens = s.replace(" - ", " + -").split(" + ")
    d: dict[int, int] = {}
    for tok in tokens:
        tok = tok.strip()
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        m = _TERM_RE.match(tok)
        if m is None:
            raise ValueError("cannot parse term %r" % tok)
        if m.group(3) is not None:
            e, c = 0, int(m.group(3))
        else:
            e = int(m.group(2))
            c = int(m.group(1)) if m.group(1) else 1
        d[e] = d.get(e, 0) + sign * c
    return LaurentPoly.from_dict(d)
