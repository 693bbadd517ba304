"""Exact dense linear algebra over the rationals.

Matrices are lists of lists (row-major) holding ints or Fractions; nothing
here ever touches floats.  A linear map f: Q^s -> Q^t is stored as a t x s
matrix whose columns are the images of the standard basis.  Sizes stay small
(tens of rows), so plain Gauss-Jordan is fine; ranks and determinants of
integer matrices take the fraction-free Bareiss route for speed.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            av = ai[k]
            if av:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += av * bk[j]
    return out


def mat_vec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))


def rref(rows, ncols):
    """Reduced row echelon form of a copy of `rows`.

    Returns (reduced_rows, pivot_cols).  Zero rows are dropped.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    """Rank of the matrix; integer input goes through Bareiss elimination."""
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    if all(isinstance(x, int) for row in rows for x in row):
        return _int_rank([row[:] for row in rows], ncols)
    return len(rref(rows, ncols)[0])


def _int_rank(m, ncols):
    # fraction-free (Bareiss) elimination; every row below the pivot is
    # rescaled even when its pivot-column entry vanishes, or the exact
    # divisions further right break
    nrows = len(m)
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        for i in range(r + 1, nrows):
            row_i, row_r = m[i], m[r]
            f = row_i[c]
            for j in range(c, ncols):
                row_i[j] = (pv * row_i[j] - f * row_r[j]) // prev
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def nullspace(rows, ncols):
    """Basis of {v : A v = 0} as a list of length-`ncols` Fraction vectors."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a, b, ncols=None):
    """One solution x of A x = b, or None if the system is inconsistent."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def column_space_projection(vectors, dim):
    """Quotient data for Q^dim / span(vectors).

    Returns (proj, section) where proj is a q x dim matrix computing quotient
    coordinates and section is a dim x q matrix lifting them back, with
    proj @ section = identity.
    """
    red, pivots = rref(vectors, dim) if vectors else ([], [])
    free = [c for c in range(dim) if c not in pivots]
    proj = []
    for e in range(dim):
        v = [Fraction(1) if j == e else Fraction(0) for j in range(dim)]
        for r, pc in enumerate(pivots):
            if v[pc] != 0:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, red[r])]
        proj.append([v[c] for c in free])
    proj = transpose(proj)
    section = [[Fraction(1) if free[q] == i else Fraction(0)
                for q in range(len(free))] for i in range(dim)]
    return proj, section


def det(rows):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in rows]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            pivot = None
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    pivot = i
                    break
            if pivot is None:
                return 0
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        pv = m[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (pv * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = pv
    return sign * m[n - 1][n - 1]
