"""Parabolic subgroups of GL(N) and their double cosets, as integer data.

No group elements are materialised. A decomposition ``V = V^1 + ... + V^k``
is its list of block dimensions; double cosets ``P_W \\ GL(N) / P_V`` are
nonnegative integer matrices with fixed margins.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError

__all__ = [
    "GroupDims",
    "UnipotentDims",
    "CosetMatrix",
    "group_dims",
    "double_cosets",
    "quadruples",
    "quadruple_to_matrix",
    "braid_permutation",
    "weighted_inversions",
    "flatten_dims",
    "shift_dimension",
    "unipotent_dims",
    "braiding_shift",
]


def _composition(c: Sequence[int]) -> list[int]:
    parts = [int(x) for x in c]
    if any(x < 0 for x in parts):
        raise DomainError("block dimensions must be nonnegative: %r" % (parts,))
    return parts


class GroupDims(NamedTuple):
    dim_G: int
    dim_L: int
    dim_U: int
    dim_P: int


class UnipotentDims(NamedTuple):
    dim_UW: int
    dim_UW_cap_PV: int
    dim_quotient: int


def group_dims(c: Sequence[int]) -> GroupDims:
    """Dimensions of GL(N), the Levi L_V, the unipotent radical U_V and P_V."""
    parts = _composition(c)
    N = sum(parts)
    dim_L = sum(x * x for x in parts)
    dim_U = sum(parts[a] * parts[b] for a in range(len(parts)) for b in range(a + 1, len(parts)))
    return GroupDims(N * N, dim_L, dim_U, dim_L + dim_U)


@dataclass(frozen=True)
class CosetMatrix:
    """A double coset as a margin-constrained matrix.

    ``entries`` has one row per part of ``rows`` and one column per part of
    ``cols``.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.rows):
            raise DomainError("entries has %d rows, expected %d" % (len(self.entries), len(self.rows)))
        for row, total in zip(self.entries, self.rows):
            if len(row) != len(self.cols) or sum(row) != total or min(row, default=0) < 0:
                raise DomainError("row %r does not match margin %d" % (row, total))
        for c, total in enumerate(self.cols):
            if sum(row[c] for row in self.entries) != total:
                raise DomainError("column %d does not match margin %d" % (c, total))

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols),
                "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "CosetMatrix":
        return cls(tuple(obj["rows"]), tuple(obj["cols"]), tuple(tuple(r) for r in obj["entries"]))


def _tables(rows, cols):
    # row-major, each cell ascending, so output is lexicographic in the flattened entries
    if not rows:
        if any(cols):
            return
        yield ()
        return
    first, rest = rows[0], rows[1:]
    for row in _row_fillings(first, cols):
        remaining = tuple(c - x for c, x in zip(cols, row))
        for tail in _tables(rest, remaining):
            yield (row,) + tail


def _row_fillings(total, caps):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    if not caps:
        if total == 0:
            yield ()
        return
    for x in range(0, min(total, caps[0]) + 1):
        for tail in _row_fillings(total - x, caps[1:]):
            yield (x,) + tail


def double_cosets(rows: Sequence[int], cols: Sequence[int]) -> list[CosetMatrix]:
    """All nonnegative integer matrices with row sums ``rows`` and column sums ``cols``.

    >>> [m.entries for m in double_cosets((1, 1), (1, 1))]
    [((0, 1), (1, 0)), ((1, 0), (0, 1))]
    """
    rows, cols = tuple(_composition(rows)), tuple(_composition(cols))
    if sum(rows) != sum(cols):
        raise DomainError("margin totals differ: %d != %d" % (sum(rows), sum(cols)))
    return [CosetMatrix(rows, cols, t) for t in _tables(rows, cols)]


def quadruples(n: int, m: int, p: int, q: int) -> list[tuple[int, int, int, int]]:
    """Solutions of ``i+j=n, k+l=m, i+k=p, j+l=q`` in nonnegative integers, by increasing ``i``."""
    for x in (n, m, p, q):
        if not isinstance(x, int) or x < 0:
            raise DomainError("degrees must be nonnegative integers")
    if n + m != p + q:
        raise DomainError("degree mismatch: %d + %d != %d + %d" % (n, m, p, q))
    return [(i, n - i, p - i, m - p + i) for i in range(max(0, p - m), min(n, p) + 1)]


def quadruple_to_matrix(quad) -> tuple[tuple[int, int], tuple[int, int]]:
    i, j, k, l = quad
    return ((i, k), (j, l))


def braid_permutation(k: int, l: int) -> list[int]:
    """One-based images of the block-transpose permutation ``1+t+n*l -> 1+n+t*k``."""
    if k < 1 or l < 1:
        raise DomainError("k and l must be positive")
    images = [0] * (k * l)
    for n in range(k):
        for t in range(l):
            images[t + n * l] = 1 + n + t * k
    return images


def weighted_inversions(perm: Sequence[int], weights: Sequence[int]) -> int:
    if len(perm) != len(weights):
        raise DomainError("permutation of degree %d, %d weights" % (len(perm), len(weights)))
    return _kernels.weighted_inversions(perm, weights)


def _grid(g) -> np.ndarray:
    arr = np.asarray(g, dtype=np.int64)
    if arr.ndim != 2:
        raise DomainError("dims grid must be two-dimensional")
    if (arr < 0).any():
        raise DomainError("dims grid entries must be nonnegative")
    return arr


def flatten_dims(g) -> list[int]:
    """Weights in source order ``V_1^1, ..., V_l^1, V_1^2, ...``."""
    return [int(x) for x in _grid(g).reshape(-1)]


def shift_dimension(g) -> int:
    """``sum_{m<n, r>s} dim V_r^m * dim V_s^n`` for ``g[m][r] = dim V_r^m``."""
    return _kernels.shift_dimension(_grid(g))


def unipotent_dims(g) -> UnipotentDims:
    return UnipotentDims(*_kernels.unipotent_dims(_grid(g)))


def braiding_shift(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(_composition(a)) * sum(_composition(b))
