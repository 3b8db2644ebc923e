"""Pure-Python reference kernels.

Both routines take integer matrices as lists of lists of ``int`` and never
round. They mirror ``_kernels.pyx`` exactly; the compiled module runs the same
algorithms in 64-bit arithmetic with 128-bit intermediates and defers to these
functions on overflow.
"""


def int_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            a = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def phase1_feasible(a, b):
    """Decide whether ``{x >= 0 : a x = b}`` is non-empty.

    Phase I of the simplex method on an integer-preserving tableau: the true
    tableau is ``T / D`` with ``D`` the (positive) determinant of the current
    basis, and every pivot divides exactly by the previous ``D``. Bland's rule
    picks entering and leaving variables, so the loop terminates.
    """
    m = len(a)
    if m == 0:
        return True
    n = len(a[0])
    t = []
    for i in range(m):
        row = list(a[i]) + [b[i]]
        if b[i] < 0:
            row = [-v for v in row]
        t.append(row)
    obj = [0] * (n + 1)
    for row in t:
        for j in range(n + 1):
            obj[j] -= row[j]
    t.append(obj)
    basis = [n + i for i in range(m)]
    d = 1
    while True:
        c = -1
        for j in range(n):
            if obj[j] < 0:
                c = j
                break
        if c < 0:
            break
        r = -1
        for i in range(m):
            aic = t[i][c]
            if aic <= 0:
                continue
            if r < 0:
                r = i
                continue
            # compare t[i][n]/aic with t[r][n]/t[r][c]; both denominators > 0
            lhs = t[i][n] * t[r][c]
            rhs = t[r][n] * aic
            if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                r = i
        if r < 0:
            # phase I objective is bounded below by zero
            raise AssertionError("unbounded phase I tableau")
        p = t[r][c]
        row_r = t[r]
        for i in range(m + 1):
            if i == r:
                continue
            row_i = t[i]
            f = row_i[c]
            if f == 0:
                for j in range(n + 1):
                    row_i[j] = row_i[j] * p // d
            else:
                for j in range(n + 1):
                    row_i[j] = (row_i[j] * p - f * row_r[j]) // d
        d = p
        basis[r] = c
    return obj[n] == 0
