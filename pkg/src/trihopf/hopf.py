"""The braided Hopf algebra of n_+ sl(2) in its canonical basis ``y_n``.

Products are ``y_k y_l = [k+l choose k] y_{k+l}``, the coproduct is
``y_n -> sum_{k+l=n} y_k (x) y_l`` and the braiding on bidegree ``(k, l)`` is
the swap scaled by ``q^{-2kl}``. Elements are finitely supported families of
Laurent coefficients keyed by degree (or bidegree, or tri-degree).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError
from .laurent import ONE, LaurentPoly, lp_add, lp_eval_one, lp_mul, lp_shift, lp_sum
from .parabolic import quadruples
from .qcomb import q_binomial, q_multinomial

__all__ = [
    "HopfElement",
    "TensorElement",
    "CoherenceReport",
    "y",
    "multiply",
    "comultiply",
    "braid",
    "braid_triple",
    "orbit_coefficient",
    "coherence_check",
    "associativity_check",
    "coassociativity_check",
    "braided_coproduct_product",
]


def _accumulate(acc: dict, key, coeff: LaurentPoly):
    if coeff.is_zero():
        return
    total = lp_add(acc[key], coeff) if key in acc else coeff
    if total.is_zero():
        del acc[key]
    else:
        acc[key] = total


def _freeze(d: Mapping) -> tuple:
    return tuple(sorted((k, v) for k, v in d.items() if not v.is_zero()))


@dataclass(frozen=True)
class HopfElement:
    """``sum c_n * y_n``; ``coeffs`` is sorted by degree with no zero entries."""

    coeffs: tuple[tuple[int, LaurentPoly], ...] = ()

    def __post_init__(self):
        for n, c in self.coeffs:
            if n < 0:
                raise DomainError("negative degree %d" % n)
            if c.is_zero():
                raise ValueError("zero coefficient stored at degree %d" % n)

    @classmethod
    def from_dict(cls, d: Mapping[int, LaurentPoly]) -> "HopfElement":
        return cls(_freeze(d))

    def as_dict(self) -> dict[int, LaurentPoly]:
        return dict(self.coeffs)

    def __add__(self, other: "HopfElement") -> "HopfElement":
        acc = self.as_dict()
        for n, c in other.coeffs:
            _accumulate(acc, n, c)
        return HopfElement.from_dict(acc)

    def scale(self, c: LaurentPoly) -> "HopfElement":
        return HopfElement.from_dict({n: lp_mul(c, v) for n, v in self.coeffs})

    def __mul__(self, other: "HopfElement") -> "HopfElement":
        return multiply(self, other)

    def to_json(self) -> dict:
        return {"terms": [{"degree": n, "coeff": c.to_json()} for n, c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "HopfElement":
        acc: dict[int, LaurentPoly] = {}
        for t in obj["terms"]:
            _accumulate(acc, int(t["degree"]), LaurentPoly.from_json(t["coeff"]))
        return cls.from_dict(acc)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("(%s)*y_%d" % (c, n) for n, c in self.coeffs)


@dataclass(frozen=True)
class TensorElement:
    """``sum c_{n,m} * y_n (x) y_m``, keyed by bidegree."""

    coeffs: tuple[tuple[tuple[int, int], LaurentPoly], ...] = ()

    def __post_init__(self):
        for (n, m), c in self.coeffs:
            if n < 0 or m < 0:
                raise DomainError("negative bidegree (%d, %d)" % (n, m))
            if c.is_zero():
                raise ValueError("zero coefficient stored at bidegree (%d, %d)" % (n, m))

    @classmethod
    def from_dict(cls, d) -> "TensorElement":
        return cls(_freeze(d))

    @classmethod
    def basis(cls, n: int, m: int, c: LaurentPoly = ONE) -> "TensorElement":
        return cls.from_dict({(n, m): c})

    def as_dict(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self.coeffs)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        acc = self.as_dict()
        for key, c in other.coeffs:
            _accumulate(acc, key, c)
        return TensorElement.from_dict(acc)

    def to_json(self) -> dict:
        return {"terms": [{"bidegree": [n, m], "coeff": c.to_json()} for (n, m), c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "TensorElement":
        acc: dict = {}
        for t in obj["terms"]:
            n, m = t["bidegree"]
            _accumulate(acc, (int(n), int(m)), LaurentPoly.from_json(t["coeff"]))
        return cls.from_dict(acc)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("(%s)*y_%d(x)y_%d" % (c, n, m) for (n, m), c in self.coeffs)


@dataclass(frozen=True)
class CoherenceReport:
    """Both sides of the coherence equation on one ``(n, m) -> (p, q)`` component.

    ``terms`` holds one entry per orbit quadruple ``(i, j, k, l)``, ordered by ``i``.
    """

    n: int
    m: int
    p: int
    q: int
    lhs: LaurentPoly
    terms: tuple[tuple[tuple[int, int, int, int], LaurentPoly], ...]
    rhs: LaurentPoly = field(init=False)
    equal: bool = field(init=False)

    def __post_init__(self):
        rhs = lp_sum(c for _, c in self.terms)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "equal", rhs == self.lhs)

    def at_one(self) -> tuple[int, list[int]]:
        """Classical shadow: both sides with ``q = 1``."""
        return lp_eval_one(self.lhs), [lp_eval_one(c) for _, c in self.terms]

    def to_json(self) -> dict:
        return {
            "degrees": [self.n, self.m, self.p, self.q],
            "lhs": self.lhs.to_json(),
            "terms": [{"quadruple": list(quad), "coeff": c.to_json()} for quad, c in self.terms],
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
        }

    @classmethod
    def from_json(cls, obj) -> "CoherenceReport":
        n, m, p, q = obj["degrees"]
        report = cls(
            n, m, p, q,
            LaurentPoly.from_json(obj["lhs"]),
            tuple((tuple(t["quadruple"]), LaurentPoly.from_json(t["coeff"])) for t in obj["terms"]),
        )
        if report.rhs != LaurentPoly.from_json(obj["rhs"]) or report.equal != obj["equal"]:
            raise ValueError("inconsistent CoherenceReport JSON")
        return report


def y(n: int, c: LaurentPoly = ONE) -> HopfElement:
    """The basis element ``c * y_n``."""
    return HopfElement.from_dict({n: c})


def multiply(u: HopfElement, v: HopfElement) -> HopfElement:
    acc: dict[int, LaurentPoly] = {}
    for k, a in u.coeffs:
        for l, b in v.coeffs:
            _accumulate(acc, k + l, lp_mul(lp_mul(a, b), q_binomial(k + l, k)))
    return HopfElement.from_dict(acc)


def comultiply(u: HopfElement) -> TensorElement:
    acc: dict = {}
    for n, c in u.coeffs:
        for k in range(n + 1):
            _accumulate(acc, (k, n - k), c)
    return TensorElement.from_dict(acc)


def braid(t: TensorElement) -> TensorElement:
    """``y_k (x) y_l -> q^{-2kl} y_l (x) y_k``."""
    return TensorElement.from_dict({(l, k): lp_shift(c, -2 * k * l) for (k, l), c in t.coeffs})


def braid_triple(t: Mapping[tuple[int, ...], LaurentPoly], pos: int) -> dict:
    """Braid tensor factors ``pos`` and ``pos + 1`` of a multi-degree family."""
    out: dict = {}
    for key, c in t.items():
        a, b = key[pos], key[pos + 1]
        new = key[:pos] + (b, a) + key[pos + 2:]
        _accumulate(out, new, lp_shift(c, -2 * a * b))
    return out


def braided_coproduct_product(u: HopfElement, v: HopfElement) -> TensorElement:
    """``(m (x) m)(1 (x) c (x) 1)(Delta (x) Delta)(u (x) v)``, applied map by map.

    No closed formula is used; each stage is materialised as a 4-fold tensor.
    """
    stage: dict = {}
    du, dv = comultiply(u), comultiply(v)
    for (i, j), a in du.coeffs:
        for (k, l), b in dv.coeffs:
            _accumulate(stage, (i, j, k, l), lp_mul(a, b))
    stage = braid_triple(stage, 1)
    acc: dict = {}
    for (i, k, j, l), c in stage.items():
        coeff = lp_mul(c, lp_mul(q_binomial(i + k, i), q_binomial(j + l, j)))
        _accumulate(acc, (i + k, j + l), coeff)
    return TensorElement.from_dict(acc)


def orbit_coefficient(i: int, j: int, k: int, l: int) -> LaurentPoly:
    """Contribution of the quadruple ``(i, j, k, l)`` to ``y_{i+j} (x) y_{k+l} -> y_{i+k} (x) y_{j+l}``.

    Splitting gives ``y_i y_j (x) y_k y_l``, the middle braiding costs
    ``q^{-2jk}``, and the two products give ``[i+k choose i][j+l choose j]``.

    >>> str(orbit_coefficient(0, 2, 1, 0))
    'q^-4'
    """
    for x in (i, j, k, l):
        if x < 0:
            raise DomainError("quadruple entries must be nonnegative")
    return lp_shift(lp_mul(q_binomial(i + k, i), q_binomial(j + l, j)), -2 * j * k)


def coherence_check(n: int, m: int, p: int, q: int) -> CoherenceReport:
    for x in (n, m, p, q):
        if not isinstance(x, int) or x < 0:
            raise DomainError("degrees must be nonnegative integers")
    if n + m != p + q:
        raise DomainError("degree mismatch: %d + %d != %d + %d" % (n, m, p, q))
    lhs = q_binomial(n + m, n)
    terms = tuple((quad, orbit_coefficient(*quad)) for quad in quadruples(n, m, p, q))
    return CoherenceReport(n, m, p, q, lhs, terms)


def associativity_check(a: int, b: int, c: int) -> bool:
    ya, yb, yc = y(a), y(b), y(c)
    left = multiply(multiply(ya, yb), yc)
    right = multiply(ya, multiply(yb, yc))
    return left == right == y(a + b + c, q_multinomial([a, b, c]))


def _coproduct_at(t: Mapping, pos: int) -> dict:
    out: dict = {}
    for key, c in t.items():
        n = key[pos]
        for k in range(n + 1):
            _accumulate(out, key[:pos] + (k, n - k) + key[pos + 1:], c)
    return out


def coassociativity_check(n: int) -> bool:
    if n < 0:
        raise DomainError("degree must be nonnegative")
    first = {key: c for key, c in comultiply(y(n)).coeffs}
    left = _coproduct_at(first, 0)
    right = _coproduct_at(first, 1)
    expected = {(a, b, n - a - b): ONE for a in range(n + 1) for b in range(n + 1 - a)}
    return left == right == expected
