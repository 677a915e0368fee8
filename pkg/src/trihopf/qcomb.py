"""q-integers, q-factorials and q-binomials in powers of ``q^-2``.

Everything here lives in the ``q^-2`` convention: ``(m) = 1 + q^-2 + ... +
q^-2(m-1)``. :func:`betti` reads Grassmannian Betti numbers off the
q-binomial, and :func:`box_partitions` counts the same numbers by a
partition count that never touches a q-factorial.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .laurent import ONE, ZERO, LaurentPoly, lp_mul

__all__ = [
    "BettiVector",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_multinomial",
    "betti",
    "box_partitions",
    "BOX_LIMIT",
]

BOX_LIMIT = 400


@dataclass(frozen=True)
class BettiVector:
    k: int
    l: int
    values: tuple[int, ...]

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "betti": list(self.values)}

    @classmethod
    def from_json(cls, obj) -> "BettiVector":
        return cls(int(obj["k"]), int(obj["l"]), tuple(int(v) for v in obj["betti"]))


def _check_nonneg(*xs):
    for x in xs:
        if not isinstance(x, int) or x < 0:
            raise DomainError("expected a nonnegative integer, got %r" % (x,))


def q_integer(m: int) -> LaurentPoly:
    _check_nonneg(m)
    return LaurentPoly(tuple((-2 * i, 1) for i in range(m)))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    _check_nonneg(n)
    if n == 0:
        return ONE
    return lp_mul(q_factorial(n - 1), q_integer(n))


def _exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Long division from the top exponent; raises unless the remainder is zero.

    ``den`` must have leading coefficient +-1, which holds for every
    q-factorial.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    lead_e, lead_c = den.terms[0]
    if lead_c not in (1, -1):
        raise ValueError("divisor must have a unit leading coefficient")
    # an exact quotient has bottom exponent val(num) - val(den)
    floor = num.valuation() - den.valuation()
    rem = num.to_dict()
    quot: dict[int, int] = {}
    while rem:
        e = max(rem) - lead_e
        if e < floor:
            break
        c = rem[max(rem)] * lead_c
        quot[e] = c
        for de, dc in den.terms:
            x = rem.get(e + de, 0) - c * dc
            if x:
                rem[e + de] = x
            else:
                del rem[e + de]
    if rem:
        raise ConsistencyError("inexact division: remainder %s" % LaurentPoly.from_dict(rem))
    return LaurentPoly.from_dict(quot)


@lru_cache(maxsize=None)
def q_binomial(N: int, k: int) -> LaurentPoly:
    """Gaussian binomial ``(N)! / ((k)! (N-k)!)`` in ``q^-2``-factorials.

    >>> str(q_binomial(4, 2))
    '1 + q^-2 + 2*q^-4 + q^-6 + q^-8'
    """
    _check_nonneg(N, k)
    if k > N:
        raise DomainError("q_binomial(%d, %d): need k <= N" % (N, k))
    den = lp_mul(q_factorial(k), q_factorial(N - k))
    return _exact_divide(q_factorial(N), den)


def q_multinomial(parts) -> LaurentPoly:
    parts = list(parts)
    _check_nonneg(*parts)
    den = ONE
    for p in parts:
        den = lp_mul(den, q_factorial(p))
    return _exact_divide(q_factorial(sum(parts)), den)


def betti(k: int, l: int) -> BettiVector:
    """Betti numbers of the Grassmannian of k-planes in (k+l)-space."""
    _check_nonneg(k, l)
    poly = q_binomial(k + l, k)
    values = [0] * (k * l + 1)
    for e, c in poly.terms:
        if e > 0 or e % 2 or -e // 2 > k * l:
            raise ConsistencyError("unexpected term %d*q^%d in q_binomial(%d, %d)" % (c, e, k + l, k))
        values[-e // 2] = c
    return BettiVector(k, l, tuple(values))


def box_partitions(k: int, l: int) -> BettiVector:
    """Number of partitions of each size with at most k parts, each at most l."""
    _check_nonneg(k, l)
    if k * l > BOX_LIMIT:
        raise ResourceLimitError("box %dx%d exceeds the enumeration bound k*l <= %d" % (k, l, BOX_LIMIT))
    counts = _kernels.box_partition_counts(k, l)
    return BettiVector(k, l, tuple(int(c) for c in counts))

