"""Hot loops of the enumerator: the all-pairs membership scan and the
triangle scan over the resulting compatibility graph.

Two interchangeable implementations exist. The numba one is used when numba
imports and ``FLOORSQ_DISABLE_NUMBA`` is unset (or ``0``); otherwise the
pure-numpy one runs. Both return identical arrays.

Membership of a sum ``m`` is decided in int64 arithmetic: floor mode asks
for a square in ``[ceil(qm/p), floor((q(m+1)-1)/p)]``, ceiling mode for one
in ``[floor(q(m-1)/p)+1, floor(qm/p)]``. Callers must keep ``q*(m+1)``
below 2**62 (see :func:`int64_safe`).
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

ENV_FLAG = "FLOORSQ_DISABLE_NUMBA"
FLOOR_MODE = 0
CEIL_MODE = 1
INT64_LIMIT = 1 << 62


def _numba_requested() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in ("", "0", "false", "no", "off")


try:
    import numba

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the default probe tries TBB first and warns when it is too old
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _numba_requested()


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def int64_safe(p: int, q: int, max_sum: int) -> bool:
    return q * (max_sum + 1) + p < INT64_LIMIT


def set_workers(workers: int | None) -> None:
    if workers and USE_NUMBA:
        numba.set_num_threads(min(workers, numba.config.NUMBA_NUM_THREADS))


# ---------------------------------------------------------------- numpy path


def isqrt_vec(n: np.ndarray) -> np.ndarray:
    s = np.sqrt(n.astype(np.float64)).astype(np.int64)
    # two-sided fix-up; float error is at most a couple of units below 2**62
    for _ in range(3):
        s -= (s * s > n).astype(np.int64)
    for _ in range(3):
        s += ((s + 1) * (s + 1) <= n).astype(np.int64)
    return s


def member_vec(m: np.ndarray, p: int, q: int, mode: int) -> np.ndarray:
    if mode == FLOOR_MODE:
        lo = (q * m + (p - 1)) // p
        hi = (q * (m + 1) - 1) // p
    else:
        lo = (q * (m - 1)) // p + 1
        hi = (q * m) // p
    s = isqrt_vec(hi)
    return (s * s >= lo) & (m >= 1)


def _pair_rows_np(vals, p, q, mode, start, stop):
    ii, jj = [], []
    for i in range(start, stop):
        sums = vals[i] + vals[i:]
        js = np.flatnonzero(member_vec(sums, p, q, mode)) + i
        if js.size:
            ii.append(np.full(js.size, i, dtype=np.int32))
            jj.append(js.astype(np.int32))
    if not ii:
        return np.empty(0, np.int32), np.empty(0, np.int32)
    return np.concatenate(ii), np.concatenate(jj)


def pair_scan_np(vals, p, q, mode, workers=1, chunk=2048):
    """All (i, j), i <= j, with vals[i] + vals[j] in the set. Row-chunked;
    chunks are merged in row order so the result ignores ``workers``."""
    n = len(vals)
    bounds = [(a, min(a + chunk, n)) for a in range(0, n, chunk)]
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(lambda b: _pair_rows_np(vals, p, q, mode, *b), bounds))
    else:
        parts = [_pair_rows_np(vals, p, q, mode, *b) for b in bounds]
    if not parts:
        return np.empty(0, np.int32), np.empty(0, np.int32)
    return np.concatenate([a for a, _ in parts]), np.concatenate([b for _, b in parts])


def pair_count_np(vals, p, q, mode):
    total = 0
    for i in range(len(vals)):
        total += int(np.count_nonzero(member_vec(vals[i] + vals[i:], p, q, mode)))
    return total


def triangle_scan_np(indptr, indices, vals, p, q, mode):
    """All i <= j <= k with (i,j), (i,k), (j,k) adjacent and the triple sum
    a member. ``indptr``/``indices`` is a symmetric CSR graph with sorted rows."""
    out = []
    n = len(indptr) - 1
    for i in range(n):
        ni = indices[indptr[i]:indptr[i + 1]]
        for j in ni[np.searchsorted(ni, i):]:
            nj = indices[indptr[j]:indptr[j + 1]]
            ks = np.intersect1d(ni[np.searchsorted(ni, j):], nj, assume_unique=True)
            if ks.size == 0:
                continue
            ok = member_vec(vals[i] + vals[j] + vals[ks], p, q, mode)
            for k in ks[ok]:
                out.append((i, int(j), int(k)))
    return np.array(out, dtype=np.int64).reshape(-1, 3)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @numba.njit(cache=True, inline="always")
    def _isqrt64(n):
        s = np.int64(np.sqrt(np.float64(n)))
        while s * s > n:
            s -= 1
        while (s + 1) * (s + 1) <= n:
            s += 1
        return s

    @numba.njit(cache=True, inline="always")
    def _member64(m, p, q, mode):
        if m < 1:
            return False
        if mode == 0:
            lo = (q * m + p - 1) // p
            hi = (q * (m + 1) - 1) // p
        else:
            lo = (q * (m - 1)) // p + 1
            hi = (q * m) // p
        s = _isqrt64(hi)
        return s * s >= lo

    @numba.njit(cache=True, parallel=True)
    def _pair_counts_nb(vals, p, q, mode):
        n = vals.shape[0]
        counts = np.zeros(n, np.int64)
        for i in numba.prange(n):
            c = 0
            vi = vals[i]
            for j in range(i, n):
                if _member64(vi + vals[j], p, q, mode):
                    c += 1
            counts[i] = c
        return counts

    @numba.njit(cache=True, parallel=True)
    def _pair_fill_nb(vals, p, q, mode, offsets, out_i, out_j):
        n = vals.shape[0]
        for i in numba.prange(n):
            pos = offsets[i]
            vi = vals[i]
            for j in range(i, n):
                if _member64(vi + vals[j], p, q, mode):
                    out_i[pos] = i
                    out_j[pos] = j
                    pos += 1

    @numba.njit(cache=True)
    def _triangles_nb(indptr, indices, vals, p, q, mode, out, count_only):
        n = indptr.shape[0] - 1
        c = 0
        for i in range(n):
            a0, a1 = indptr[i], indptr[i + 1]
            for e in range(a0, a1):
                j = indices[e]
                if j < i:
                    continue
                b0, b1 = indptr[j], indptr[j + 1]
                # merge ni[>= j] with nj
                x = e
                y = b0
                while x < a1 and y < b1:
                    u = indices[x]
                    w = indices[y]
                    if u < w:
                        x += 1
                    elif w < u:
                        y += 1
                    else:
                        if _member64(vals[i] + vals[j] + vals[u], p, q, mode):
                            if not count_only:
                                out[c, 0] = i
                                out[c, 1] = j
                                out[c, 2] = u
                            c += 1
                        x += 1
                        y += 1
        return c

    def pair_count_nb(vals, p, q, mode):
        return int(_pair_counts_nb(vals, p, q, mode).sum())

    def pair_scan_nb(vals, p, q, mode, max_pairs=None):
        counts = _pair_counts_nb(vals, p, q, mode)
        total = int(counts.sum())
        if max_pairs is not None and total > max_pairs:
            raise MemoryError(total)
        offsets = np.zeros(len(vals), np.int64)
        if len(vals) > 1:
            offsets[1:] = np.cumsum(counts)[:-1]
        out_i = np.empty(total, np.int32)
        out_j = np.empty(total, np.int32)
        _pair_fill_nb(vals, p, q, mode, offsets, out_i, out_j)
        return out_i, out_j

    def triangle_scan_nb(indptr, indices, vals, p, q, mode):
        dummy = np.empty((0, 3), np.int64)
        c = _triangles_nb(indptr, indices, vals, p, q, mode, dummy, True)
        out = np.empty((c, 3), np.int64)
        _triangles_nb(indptr, indices, vals, p, q, mode, out, False)
        return out


# ---------------------------------------------------------------- dispatch


def pair_scan(vals, p, q, mode, workers=1, max_pairs=None):
    vals = np.ascontiguousarray(vals, dtype=np.int64)
    if USE_NUMBA:
        return pair_scan_nb(vals, np.int64(p), np.int64(q), mode, max_pairs)
    i, j = pair_scan_np(vals, p, q, mode, workers)
    if max_pairs is not None and len(i) > max_pairs:
        raise MemoryError(len(i))
    return i, j


def triangle_scan(indptr, indices, vals, p, q, mode):
    vals = np.ascontiguousarray(vals, dtype=np.int64)
    if USE_NUMBA:
        return triangle_scan_nb(indptr.astype(np.int64), indices.astype(np.int64), vals,
                                np.int64(p), np.int64(q), mode)
    return triangle_scan_np(indptr, indices, vals, p, q, mode)


def symmetric_csr(n: int, ii: np.ndarray, jj: np.ndarray):
    """CSR adjacency of the undirected graph with edges (ii, jj), i <= j,
    self-loops kept once, rows sorted."""
    off = ii != jj
    src = np.concatenate([ii, jj[off]]).astype(np.int64)
    dst = np.concatenate([jj, ii[off]]).astype(np.int64)
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, dst
