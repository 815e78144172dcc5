# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels.

Same contracts as ``_kernels_py``.  The GF(p) routines work on a contiguous
C buffer of ``long long``; since ``p < 2**31`` every product of two reduced
entries fits in 62 bits.  The integer routines keep Python ints (they must
not overflow) but run the loops without interpreter dispatch.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef i64* _load(rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef Py_ssize_t n = nrows * ncols
    cdef i64* m = <i64*> malloc((n if n > 0 else 1) * sizeof(i64))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            m[i * ncols + j] = row[j]
    return m


cdef Py_ssize_t _eliminate_modp(i64* m, Py_ssize_t nrows, Py_ssize_t ncols,
                                i64 p, bint full, list pivots):
    cdef Py_ssize_t r = 0, c, i, j, piv, start
    cdef i64 inv, f, v, tmp
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        inv = _inv_mod(m[r * ncols + c], p)
        if inv != 1:
            for j in range(c, ncols):
                m[r * ncols + j] = (m[r * ncols + j] * inv) % p
        start = 0 if full else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            f = m[i * ncols + c]
            if f == 0:
                continue
            for j in range(c, ncols):
                v = m[i * ncols + j] - (f * m[r * ncols + j]) % p
                if v < 0:
                    v += p
                m[i * ncols + j] = v
        if pivots is not None:
            pivots.append(c)
        r += 1
    return r


def rref_modp(rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows), i, j, r
    cdef i64* m = _load(rows, nrows, ncols)
    cdef list pivots = []
    try:
        r = _eliminate_modp(m, nrows, ncols, p, True, pivots)
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(m)
    return out, pivots


def rank_modp(rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows), r
    cdef i64* m = _load(rows, nrows, ncols)
    try:
        r = _eliminate_modp(m, nrows, ncols, p, False, None)
    finally:
        free(m)
    return r


def rref_int(rows, Py_ssize_t ncols):
    cdef list m = [list(row_) for row_ in rows]
    cdef Py_ssize_t nrows = len(m), r = 0, c, i, j, piv
    cdef list pivots = []
    cdef list prow, row
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list> m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = <list> m[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list> m[i]
            f = row[c]
            if f:
                for j in range(ncols):
                    row[j] = (pv * row[j] - f * prow[j]) // prev
            elif pv != prev:
                for j in range(ncols):
                    row[j] = pv * row[j] // prev
        prev = pv
        pivots.append(c)
        r += 1
    return m[:r], pivots, prev


def rank_int(rows, Py_ssize_t ncols):
    cdef list m = [list(row_) for row_ in rows]
    cdef Py_ssize_t nrows = len(m), r = 0, c, i, j, piv
    cdef list prow, row
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list> m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = <list> m[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            row = <list> m[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j] - f * prow[j]) // prev
            elif pv != prev:
                for j in range(c + 1, ncols):
                    row[j] = pv * row[j] // prev
            row[c] = 0
        prev = pv
        r += 1
    return r


def matmul_modp(a, b, i64 p):
    cdef Py_ssize_t n = len(a), k = len(b), i, j, t
    cdef Py_ssize_t mcols = len(b[0]) if k else 0
    cdef i64* am = _load(a, n, k)
    cdef i64* bm = _load(b, k, mcols)
    cdef i64 acc, x
    cdef list out = []
    try:
        for i in range(n):
            row = []
            for j in range(mcols):
                acc = 0
                for t in range(k):
                    x = am[i * k + t]
                    if x != 0:
                        acc = (acc + x * bm[t * mcols + j]) % p
                row.append(acc)
            out.append(row)
    finally:
        free(am)
        free(bm)
    return out


def matmul_int(a, b):
    cdef Py_ssize_t n = len(a), k = len(b), i, j, t
    cdef Py_ssize_t mcols = len(b[0]) if k else 0
    cdef list out = [], row, arow
    cdef list cols = [list(col) for col in zip(*b)] if k else []
    for i in range(n):
        arow = list(a[i])
        row = []
        for j in range(mcols):
            acc = 0
            col = <list> cols[j]
            for t in range(k):
                x = arow[t]
                if x:
                    acc += x * col[t]
            row.append(acc)
        out.append(row)
    return out
