"""Numba kernels filling triangular Sprague-Grundy tables.

Storage is a flat uint32 array holding rows ``a = 0..A``; row ``a`` covers
``b = a..B`` and starts at ``offsets[a]``.  Followers are never read
individually for the named games: every move family is a "line" (same low
pile, same high pile, same diagonal ``b - a``) whose values are kept as a
64-bit-word bitset, so the mex is a scan for the first word with a zero bit.

For E-Wythoff the followers of ``(a, b)`` other than the row are exactly the
cells with ``y <= b`` and ``y - x >= b - a`` (taking k from the smaller pile and
l <= k from the other).  Processed column by column, that region is every
finished cell whose offset is at least ``b - a``, so one integer per value
(its largest offset so far) decides membership.

Game codes: 0 Wythoff, 1 R-Wythoff, 2 E-Wythoff, 3 pair-matrix game.
"""

import numpy as np
from numba import njit, prange

WYTHOFF, R_WYTHOFF, E_WYTHOFF, PAIRS = 0, 1, 2, 3

_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)
_ONE = np.uint64(1)


@njit(cache=True, inline="always")
def _ctz(x):
    n = 0
    if (x & np.uint64(0xFFFFFFFF)) == 0:
        n += 32
        x >>= np.uint64(32)
    if (x & np.uint64(0xFFFF)) == 0:
        n += 16
        x >>= np.uint64(16)
    if (x & np.uint64(0xFF)) == 0:
        n += 8
        x >>= np.uint64(8)
    if (x & np.uint64(0xF)) == 0:
        n += 4
        x >>= np.uint64(4)
    if (x & np.uint64(0x3)) == 0:
        n += 2
        x >>= np.uint64(2)
    if (x & _ONE) == 0:
        n += 1
    return n


@njit(cache=True, inline="always")
def _bit(m):
    return _ONE << np.uint64(m & 63)


@njit(cache=True)
def row_offsets(A, B):
    off = np.empty(A + 2, np.int64)
    off[0] = 0
    for a in range(A + 1):
        off[a + 1] = off[a] + (B - a + 1)
    return off


@njit(cache=True)
def fill_columns(code, A, B, dense, pairs):
    """Fill rows ``0..A`` (columns up to ``B``), ascending by b then a.

    ``dense`` keeps one bitset per diagonal (memory ``(B+1) * V / 8`` bytes);
    otherwise diagonal values are marked per cell, costing O(a) each.
    """
    V = A + B + 2  # every value is <= a + b
    W = (V >> 6) + 2
    off = row_offsets(A, B)
    g = np.zeros(off[A + 1], np.uint32)

    rows = np.zeros((A + 1, W), np.uint64)
    row_lo = np.zeros(A + 1, np.int64)
    col = np.zeros(W, np.uint64)
    other = np.zeros((B + 1 if dense else 1, W), np.uint64)
    scratch = np.zeros(W, np.uint64)
    touched = np.empty(V + A * (A + 1) // 2 + A + 1, np.int64)
    maxw = np.full(V, -1, np.int64)
    use_col = code == WYTHOFF or code == PAIRS

    for b in range(B + 1):
        top = min(b, A)
        for a in range(top + 1):
            d = b - a
            nt = 0
            if not dense and code != E_WYTHOFF:
                for x in range(a):
                    v = g[off[x] + d]
                    scratch[v >> 6] |= _bit(v)
                    touched[nt] = v
                    nt += 1
            if code == PAIRS:
                for k in range(1, a + 1):
                    x = a - k
                    for l in range(k):
                        if pairs[k, l]:
                            v = g[off[x] + (b - l) - x]
                            scratch[v >> 6] |= _bit(v)
                            touched[nt] = v
                            nt += 1
            w = row_lo[a]
            while True:
                u = rows[a, w] | scratch[w]
                if use_col:
                    u |= col[w]
                if dense:
                    u |= other[d, w]
                if u == _FULL:
                    w += 1
                    continue
                m = (w << 6) + _ctz(~u)
                if code == E_WYTHOFF and not dense and maxw[m] >= d:
                    scratch[m >> 6] |= _bit(m)
                    touched[nt] = m
                    nt += 1
                    continue
                break
            for i in range(nt):
                v = touched[i]
                scratch[v >> 6] &= ~_bit(v)

            g[off[a] + d] = m
            rows[a, m >> 6] |= _bit(m)
            while rows[a, row_lo[a]] == _FULL:
                row_lo[a] += 1
            if b <= A and b != a:
                rows[b, m >> 6] |= _bit(m)
                while rows[b, row_lo[b]] == _FULL:
                    row_lo[b] += 1
            if use_col:
                col[m >> 6] |= _bit(m)
            if code == E_WYTHOFF:
                if maxw[m] < d:
                    if dense:
                        for dd in range(maxw[m] + 1, d + 1):
                            other[dd, m >> 6] |= _bit(m)
                    maxw[m] = d
            elif dense:
                other[d, m >> 6] |= _bit(m)
        if use_col:
            for a in range(top + 1):
                v = g[off[a] + b - a]
                col[v >> 6] &= ~_bit(v)
    return g, off


@njit(cache=True, parallel=True)
def fill_wavefront(code, N, pairs):
    """Fill the full table to ``N`` by antidiagonals ``a + b = s``.

    Cells of one antidiagonal share no row, column or diagonal line, so they
    are computed in parallel; the loop over ``s`` is the barrier.  E-Wythoff
    must be passed as ``PAIRS`` with its pair matrix.
    """
    V = 2 * N + 2
    W = (V >> 6) + 2
    off = row_offsets(N, N)
    g = np.zeros(off[N + 1], np.uint32)
    rows = np.zeros((N + 1, W), np.uint64)
    row_lo = np.zeros(N + 1, np.int64)
    diag = np.zeros((N + 1, W), np.uint64)
    use_col = code == WYTHOFF or code == PAIRS

    for s in range(2 * N + 1):
        a_lo = max(0, s - N)
        count = s // 2 - a_lo + 1
        for i in prange(count):
            a = a_lo + i
            b = s - a
            d = b - a
            scratch = np.zeros(W if code == PAIRS else 1, np.uint64)
            if code == PAIRS:
                for k in range(1, a + 1):
                    x = a - k
                    for l in range(k):
                        if pairs[k, l]:
                            v = g[off[x] + (b - l) - x]
                            scratch[v >> 6] |= _bit(v)
            w = row_lo[a]
            while True:
                u = rows[a, w] | diag[d, w]
                if use_col:
                    u |= rows[b, w]
                if code == PAIRS:
                    u |= scratch[w]
                if u != _FULL:
                    break
                w += 1
            m = (w << 6) + _ctz(~u)
            g[off[a] + d] = m
            rows[a, m >> 6] |= _bit(m)
            while rows[a, row_lo[a]] == _FULL:
                row_lo[a] += 1
            if b != a:
                rows[b, m >> 6] |= _bit(m)
                while rows[b, row_lo[b]] == _FULL:
                    row_lo[b] += 1
            diag[d, m >> 6] |= _bit(m)
    return g, off
