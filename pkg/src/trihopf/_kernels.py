"""Integer kernels with a numba path and a pure-numpy fallback.

Set ``TRIHOPF_DISABLE_NUMBA=1`` before import to force the numpy path; it is
also used when numba cannot be imported. Both paths return the same int64
results and are compared in the test suite.

Only fixed-width integer work lives here. Anything that needs unbounded
integers (Laurent coefficients, q-factorials) stays in pure Python.
"""
import os

import numpy as np

_disabled = os.environ.get("TRIHOPF_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError("numba disabled by TRIHOPF_DISABLE_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


# --- pure-numpy reference path -------------------------------------------

def box_partition_counts_np(k, l):
    # table[j, s] = partitions of s into exactly j parts, each part <= v;
    # row j-1 is already updated for v, so part v may repeat
    size = k * l
    table = np.zeros((k + 1, size + 1), dtype=np.int64)
    table[0, 0] = 1
    for v in range(1, l + 1):
        for j in range(1, k + 1):
            table[j, v:] += table[j - 1, : size + 1 - v]
    return table.sum(axis=0)


def weighted_inversions_np(images, weights):
    images = np.asarray(images, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64)
    inv = np.triu(images[:, None] > images[None, :], k=1)
    return int((np.outer(weights, weights) * inv).sum())


def _pair_masks(k, l):
    m = np.arange(k)
    r = np.arange(l)
    m_lt = m[:, None] < m[None, :]
    m_ge = ~m_lt
    r_gt = r[:, None] > r[None, :]
    return m_lt, m_ge, r_gt


def shift_dimension_np(grid):
    # sum over m<n, r>s of d[m][r] * d[n][s]
    g = np.asarray(grid, dtype=np.int64)
    k, l = g.shape
    m_lt, _, r_gt = _pair_masks(k, l)
    prod = np.einsum("mr,ns->mnrs", g, g)
    return int(prod[m_lt][:, r_gt].sum())


def unipotent_dims_np(grid):
    g = np.asarray(grid, dtype=np.int64)
    k, l = g.shape
    m_lt, m_ge, r_gt = _pair_masks(k, l)
    prod = np.einsum("mr,ns->mnrs", g, g)
    on_r = prod[:, :, r_gt]
    return int(on_r.sum()), int(on_r[m_ge].sum()), int(on_r[m_lt].sum())


# --- numba path ------------------------------------------------------------

if HAS_NUMBA:

    @njit(cache=True)
    def box_partition_counts_nb(k, l):
        size = k * l
        table = np.zeros((k + 1, size + 1), dtype=np.int64)
        table[0, 0] = 1
        for v in range(1, l + 1):
            for j in range(1, k + 1):
                for s in range(v, size + 1):
                    table[j, s] += table[j - 1, s - v]
        out = np.zeros(size + 1, dtype=np.int64)
        for j in range(k + 1):
            for s in range(size + 1):
                out[s] += table[j, s]
        return out

    @njit(cache=True)
    def weighted_inversions_nb(images, weights):
        n = images.shape[0]
        total = 0
        for a in range(n):
            for b in range(a + 1, n):
                if images[a] > images[b]:
                    total += weights[a] * weights[b]
        return total

    @njit(cache=True)
    def shift_dimension_nb(g):
        k, l = g.shape
        total = 0
        for m in range(k):
            for n in range(m + 1, k):
                for r in range(l):
                    for s in range(r):
                        total += g[m, r] * g[n, s]
        return total

    @njit(cache=True)
    def unipotent_dims_nb(g):
        k, l = g.shape
        full = 0
        cap = 0
        quot = 0
        for m in range(k):
            for n in range(k):
                for r in range(l):
                    for s in range(r):
                        x = g[m, r] * g[n, s]
                        full += x
                        if m >= n:
                            cap += x
                        else:
                            quot += x
        return full, cap, quot


# --- dispatch ----------------------------------------------------------------

def box_partition_counts(k, l):
    """Counts of partitions fitting a k x l box, indexed by size."""
    if HAS_NUMBA:
        return box_partition_counts_nb(k, l)
    return box_partition_counts_np(k, l)


def weighted_inversions(images, weights):
    if HAS_NUMBA:
        return int(weighted_inversions_nb(np.asarray(images, dtype=np.int64),
                                          np.asarray(weights, dtype=np.int64)))
    return weighted_inversions_np(images, weights)


def shift_dimension(grid):
    if HAS_NUMBA:
        return int(shift_dimension_nb(np.asarray(grid, dtype=np.int64)))
    return shift_dimension_np(grid)


def unipotent_dims(grid):
    if HAS_NUMBA:
        full, cap, quot = unipotent_dims_nb(np.asarray(grid, dtype=np.int64))
        return int(full), int(cap), int(quot)
    return unipotent_dims_np(grid)
