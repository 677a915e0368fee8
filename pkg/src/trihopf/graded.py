"""Hilbert series shadows of equivariant cohomology of a point.

``H_GL(n)(pt)`` is the ring ``A_n`` of symmetric polynomials in ``n``
variables of degree 2, with Hilbert series ``prod_{j<=n} 1/(1-t^j)``.

Grading dictionary, used nowhere else: cohomological degree ``2i`` is
``t^i``, and ``t^i`` becomes ``q^{-2i}`` in the Laurent ring.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConsistencyError, DomainError
from .laurent import ONE, LaurentPoly
from .qcomb import q_binomial

__all__ = [
    "TruncatedSeries",
    "hilbert_series",
    "series_divide",
    "graded_quotient",
    "t_to_q",
    "graded_rank",
    "mult_on_constant",
    "comult_on_constant",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``sum c_i t^i`` known up to ``t^cutoff``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a truncated series keeps at least the constant term")

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.cutoff, other.cutoff) + 1
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j in range(n - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out))

    def truncate(self, cutoff: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: cutoff + 1])

    def to_json(self) -> dict:
        return {"cutoff": self.cutoff, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "TruncatedSeries":
        series = cls(tuple(int(c) for c in obj["coeffs"]))
        if series.cutoff != int(obj["cutoff"]):
            raise ValueError("cutoff does not match coefficient count")
        return series


def _inverse_one_minus_power(coeffs: list[int], j: int) -> None:
    # in place multiply by 1/(1 - t^j): running sum with stride j
    for i in range(j, len(coeffs)):
        coeffs[i] += coeffs[i - j]


def hilbert_series(parts: Sequence[int], cutoff: int) -> TruncatedSeries:
    """Hilbert series of ``A_{n_1} (x) ... (x) A_{n_k}`` up to ``t^cutoff``.

    >>> hilbert_series([2], 4).coeffs
    (1, 1, 2, 2, 3)
    """
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    coeffs = [1] + [0] * cutoff
    for n in parts:
        if n < 0:
            raise DomainError("negative rank %d" % n)
        for j in range(1, n + 1):
            _inverse_one_minus_power(coeffs, j)
    return TruncatedSeries(tuple(coeffs))


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient at the common cutoff; ``den`` must have constant term 1."""
    if den.coeffs[0] != 1:
        raise DomainError("denominator must have constant term 1")
    n = min(num.cutoff, den.cutoff) + 1
    out = [0] * n
    for i in range(n):
        out[i] = num.coeffs[i] - sum(out[j] * den.coeffs[i - j] for j in range(i))
    return TruncatedSeries(tuple(out))


def graded_quotient(k: int, l: int, cutoff: int) -> TruncatedSeries:
    """``Hilb(A_k (x) A_l) / Hilb(A_{k+l})`` up to ``t^cutoff``, unchecked."""
    if k < 0 or l < 0:
        raise DomainError("ranks must be nonnegative")
    return series_divide(hilbert_series([k, l], cutoff), hilbert_series([k + l], cutoff))


def t_to_q(coeffs: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.from_dict({-2 * i: int(c) for i, c in enumerate(coeffs) if c})


def graded_rank(k: int, l: int, cutoff: int) -> LaurentPoly:
    """Graded rank of ``A_k (x) A_l`` over ``A_{k+l}``, as a polynomial in ``q``.

    The quotient series must stop at ``t^{kl}``; any nonzero coefficient
    between ``kl + 1`` and ``cutoff`` raises :class:`ConsistencyError`.
    """
    if cutoff < k * l:
        raise DomainError("cutoff %d below k*l = %d" % (cutoff, k * l))
    quot = graded_quotient(k, l, cutoff)
    tail = quot.coeffs[k * l + 1:]
    if any(tail):
        raise ConsistencyError("quotient series for (%d, %d) has a nonzero tail %r" % (k, l, tail))
    return t_to_q(quot.coeffs[: k * l + 1])


def mult_on_constant(k: int, l: int) -> LaurentPoly:
    """Coefficient space of ``m_{k,l}`` on the constant object: cohomology of ``Gr_k^{k+l}``."""
    rank = graded_rank(k, l, k * l)
    if rank != q_binomial(k + l, k):
        raise ConsistencyError("graded rank for (%d, %d) disagrees with the q-binomial" % (k, l))
    return rank


def comult_on_constant(k: int, l: int) -> LaurentPoly:
    if k < 0 or l < 0:
        raise DomainError("ranks must be nonnegative")
    return ONE
