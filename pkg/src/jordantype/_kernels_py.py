"""Pure-Python elimination kernels.

These are the reference implementations of the hot loops; ``_kernels.pyx``
mirrors them function for function.  All functions take and return plain
lists of Python ints and never mutate their arguments.

Two coefficient domains are supported:

* ``*_modp``: entries are ints in ``[0, p)`` for a prime ``p < 2**31``.
* ``*_int``: entries are arbitrary Python ints; elimination is fraction-free
  (Bareiss), so every intermediate entry is a minor of the input and all
  divisions are exact.
"""


def rref_modp(rows, ncols, p):
    """Reduced row echelon form over GF(p).

    Returns ``(reduced, pivots)`` where ``reduced`` holds only the nonzero
    rows, each with a leading 1 at the matching pivot column.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = pow(prow[c], p - 2, p)
        if inv != 1:
            prow = [x * inv % p for x in prow]
            m[r] = prow
        tail = prow[c:]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f:
                row[c:] = [(a - f * b) % p for a, b in zip(row[c:], tail)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_modp(rows, ncols, p):
    m = [list(r) for r in rows]
    nrows = len(m)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = pow(prow[c], p - 2, p)
        tail = [x * inv % p for x in prow[c:]]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            if f:
                row[c:] = [(a - f * b) % p for a, b in zip(row[c:], tail)]
        r += 1
    return r


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(reduced, pivots, denom)``; the reduced row echelon form over Q
    is ``reduced / denom``.  After each pivot step every pivot entry equals
    the current divisor, which is the determinant of the leading pivot minor.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f:
                m[i] = [(pv * a - f * b) // prev for a, b in zip(row, prow)]
            elif pv != prev:
                m[i] = [pv * a // prev for a in row]
        prev = pv
        pivots.append(c)
        r += 1
    return m[:r], pivots, prev


def rank_int(rows, ncols):
    """Rank over Q by one-sided Bareiss elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        pv = prow[c]
        tail = prow[c + 1:]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            rest = row[c + 1:]
            if f:
                row[c + 1:] = [(pv * a - f * b) // prev for a, b in zip(rest, tail)]
            elif pv != prev:
                row[c + 1:] = [pv * a // prev for a in rest]
            row[c] = 0
        prev = pv
        r += 1
    return r


def matmul_modp(a, b, p):
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def matmul_int(a, b):
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
