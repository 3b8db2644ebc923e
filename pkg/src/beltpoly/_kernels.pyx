# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels: Bareiss rank and fraction-free Phase I simplex.

Entries are held in int64 with int128 intermediates. Any intermediate that
leaves the +/-2**62 window makes the routine return an overflow code; the
Python wrappers then rerun the call in ``_kernels_py`` with unbounded ints.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    #include <stdint.h>
    #define BP_LIMIT ((__int128)1 << 62)

    static int bp_fits(__int128 v) { return v < BP_LIMIT && v > -BP_LIMIT; }

    /* returns rank, or -1 on overflow */
    static int bp_rank(int64_t *m, int nrows, int ncols) {
        int64_t prev = 1;
        int r = 0;
        for (int c = 0; c < ncols && r < nrows; ++c) {
            int piv = -1;
            for (int i = r; i < nrows; ++i) {
                if (m[i * ncols + c] != 0) { piv = i; break; }
            }
            if (piv < 0) continue;
            if (piv != r) {
                for (int j = 0; j < ncols; ++j) {
                    int64_t tmp = m[r * ncols + j];
                    m[r * ncols + j] = m[piv * ncols + j];
                    m[piv * ncols + j] = tmp;
                }
            }
            int64_t p = m[r * ncols + c];
            for (int i = r + 1; i < nrows; ++i) {
                int64_t a = m[i * ncols + c];
                for (int j = c + 1; j < ncols; ++j) {
                    __int128 v = (__int128)p * m[i * ncols + j]
                               - (__int128)a * m[r * ncols + j];
                    v /= prev;
                    if (!bp_fits(v)) return -1;
                    m[i * ncols + j] = (int64_t)v;
                }
                m[i * ncols + c] = 0;
            }
            prev = p;
            ++r;
        }
        return r;
    }

    /* tableau t has (m + 1) rows of (n + 1) entries, objective row last.
       returns 1 feasible, 0 infeasible, -1 overflow */
    static int bp_phase1(int64_t *t, int m, int n, int *basis) {
        int w = n + 1;
        int64_t d = 1;
        int64_t *obj = t + m * w;
        for (;;) {
            int c = -1;
            for (int j = 0; j < n; ++j) {
                if (obj[j] < 0) { c = j; break; }
            }
            if (c < 0) break;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                int64_t aic = t[i * w + c];
                if (aic <= 0) continue;
                if (r < 0) { r = i; continue; }
                __int128 lhs = (__int128)t[i * w + n] * t[r * w + c];
                __int128 rhs = (__int128)t[r * w + n] * aic;
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[r])) r = i;
            }
            if (r < 0) return -2;
            int64_t p = t[r * w + c];
            for (int i = 0; i <= m; ++i) {
                if (i == r) continue;
                int64_t f = t[i * w + c];
                for (int j = 0; j <= n; ++j) {
                    __int128 v = (__int128)t[i * w + j] * p
                               - (__int128)f * t[r * w + j];
                    v /= d;
                    if (!bp_fits(v)) return -1;
                    t[i * w + j] = (int64_t)v;
                }
            }
            d = p;
            basis[r] = c;
        }
        return obj[n] == 0 ? 1 : 0;
    }
    """
    int bp_rank(int64_t *m, int nrows, int ncols) nogil
    int bp_phase1(int64_t *t, int m, int n, int *basis) nogil

from . import _kernels_py

cdef long long LIMIT = 4611686018427387904  # 2**62


cdef bint _load(list rows, int64_t *dst, int width):
    cdef int i = 0
    cdef object v
    for row in rows:
        for v in row:
            if v >= LIMIT or v <= -LIMIT:
                return False
            dst[i] = v
            i += 1
    return True


def int_rank(rows):
    """Rank of an integer matrix (list of lists)."""
    rows = list(rows)
    if not rows:
        return 0
    cdef int nrows = len(rows)
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef int64_t *m = <int64_t *> malloc(nrows * ncols * sizeof(int64_t))
    cdef int res
    try:
        if not _load(rows, m, ncols):
            return _kernels_py.int_rank(rows)
        res = bp_rank(m, nrows, ncols)
    finally:
        free(m)
    if res < 0:
        return _kernels_py.int_rank(rows)
    return res


def phase1_feasible(a, b):
    """Decide whether ``{x >= 0 : a x = b}`` is non-empty (integer data)."""
    a = list(a)
    cdef int m = len(a)
    if m == 0:
        return True
    cdef int n = len(a[0])
    rows = []
    for i in range(m):
        row = list(a[i]) + [b[i]]
        if b[i] < 0:
            row = [-v for v in row]
        rows.append(row)
    obj = [0] * (n + 1)
    for row in rows:
        for j in range(n + 1):
            obj[j] -= row[j]
    rows.append(obj)
    cdef int64_t *t = <int64_t *> malloc((m + 1) * (n + 1) * sizeof(int64_t))
    cdef int *basis = <int *> malloc(m * sizeof(int))
    cdef int res
    try:
        if not _load(rows, t, n + 1):
            return _kernels_py.phase1_feasible(a, b)
        for i in range(m):
            basis[i] = n + i
        with nogil:
            res = bp_phase1(t, m, n, basis)
    finally:
        free(t)
        free(basis)
    if res == -1:
        return _kernels_py.phase1_feasible(a, b)
    if res == -2:
        raise AssertionError("unbounded phase I tableau")
    return res == 1
