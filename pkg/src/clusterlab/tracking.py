"""C-, G-, F- and D-matrix bookkeeping along mutation walks.

A TrackedSeed carries the seed together with the three integer matrices
advanced by the mutation recursions, plus the walk that produced it.  All
values are immutable; mutation returns a fresh snapshot.

Recursions (k the mutation direction, everything columnwise):

  c'_j = -c_j                                   if j = k
         c_j + [b_kj]+ c_k + b_kj [-c_k]+       otherwise

  g'_k = -g_k + sum_i [b_ik]+ g_i - sum_i [c_ik]+ b0_i     (b0 = initial matrix)

  f'_k = -f_k + max([c_k]+ + sum_i [b_ik]+ f_i,
                    [-c_k]+ + sum_i [-b_ik]+ f_i)          (componentwise max)

The g-recursion sums initial-matrix columns b0_i weighted by the positive
parts of the c-column; that reading is pinned down by the exact identity
G^tr S C = S, which the test suite checks at every reached vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exchange import ExchangeMatrix, Seed, mutate_seed, langlands_dual
from .laurent import LaurentPoly


def _pos(x):
    return x if x > 0 else 0


def _col(m, j):
    return [row[j] for row in m]


@dataclass(frozen=True)
class TrackedSeed:
    seed: Seed
    c: tuple  # C-matrix, tuple of row tuples
    g: tuple  # G-matrix
    f: tuple  # F-matrix (columns nonnegative)
    walk: tuple  # 1-based directions from the root
    b0: tuple  # initial exchange matrix rows
    s: tuple  # skew-symmetrizer of the root matrix

    @classmethod
    def initial(cls, matrix: ExchangeMatrix) -> "TrackedSeed":
        n = matrix.n
        ident = tuple(tuple(1 if i == j else 0 for j in range(n))
                      for i in range(n))
        zero = tuple((0,) * n for _ in range(n))
        return cls(Seed.initial(matrix), ident, ident, zero, (),
                   matrix.b, matrix.skew_symmetrizer())

    @property
    def n(self):
        return self.seed.matrix.n

    def matrix(self) -> ExchangeMatrix:
        return self.seed.matrix


def mutate_tracked(t: TrackedSeed, k: int) -> TrackedSeed:
    """Advance seed, C, G and F consistently in direction k (1-based)."""
    n = t.n
    if not 1 <= k <= n:
        raise IndexError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    b = t.seed.matrix.b
    c_cols = [list(_col(t.c, j)) for j in range(n)]
    g_cols = [list(_col(t.g, j)) for j in range(n)]
    f_cols = [list(_col(t.f, j)) for j in range(n)]
    ck = c_cols[kk]

    new_c = []
    for j in range(n):
        if j == kk:
            new_c.append([-x for x in ck])
        else:
            bkj = b[kk][j]
            new_c.append([c_cols[j][r] + _pos(bkj) * ck[r] + bkj * _pos(-ck[r])
                          for r in range(n)])

    gk = [-x for x in g_cols[kk]]
    for i in range(n):
        w = _pos(b[i][kk])
        if w:
            gk = [x + w * y for x, y in zip(gk, g_cols[i])]
    for i in range(n):
        w = _pos(ck[i])
        if w:
            gk = [x - w * t.b0[r][i] for r, x in enumerate(gk)]
    new_g = list(g_cols)
    new_g[kk] = gk

    arg1 = [_pos(x) for x in ck]
    arg2 = [_pos(-x) for x in ck]
    for i in range(n):
        wp, wm = _pos(b[i][kk]), _pos(-b[i][kk])
        if wp:
            arg1 = [x + wp * y for x, y in zip(arg1, f_cols[i])]
        if wm:
            arg2 = [x + wm * y for x, y in zip(arg2, f_cols[i])]
    fk = [max(a, c) - x for a, c, x in zip(arg1, arg2, f_cols[kk])]
    if any(x < 0 for x in fk):
        raise AssertionError("F-column turned negative; recursion bug")
    new_f = list(f_cols)
    new_f[kk] = fk

    def rows(cols):
        return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))

    return TrackedSeed(mutate_seed(t.seed, k), rows(new_c), rows(new_g),
                       rows(new_f), t.walk + (k,), t.b0, t.s)


def run_walk(matrix: ExchangeMatrix, walk) -> TrackedSeed:
    t = TrackedSeed.initial(matrix)
    for k in walk:
        t = mutate_tracked(t, k)
    return t


def d_matrix(t: TrackedSeed):
    """Columns are the denominator vectors of the cluster entries."""
    cols = [p.denominator_vector() for p in t.seed.cluster]
    return [[cols[j][i] for j in range(t.n)] for i in range(t.n)]


def check_tropical_duality(t: TrackedSeed) -> bool:
    """Exact identity G^tr S C = S."""
    n = t.n
    for i in range(n):
        for j in range(n):
            total = sum(t.g[r][i] * t.s[r] * t.c[r][j] for r in range(n))
            if total != (t.s[i] if i == j else 0):
                return False
    return True


def check_langlands_dualities(walk, matrix: ExchangeMatrix) -> bool:
    """F_t = S^-1 F^v_t S and C_t = S^-1 C^v_t S for the given walk.

    Both sides are compared after clearing S, so the check stays integral.
    """
    t = run_walk(matrix, walk)
    tv = run_walk(langlands_dual(matrix), walk)
    s = t.s
    n = t.n
    for m, mv in ((t.f, tv.f), (t.c, tv.c)):
        for i in range(n):
            for j in range(n):
                # M = S^-1 M^v S  <=>  s_i M_ij = M^v_ij s_j
                if s[i] * m[i][j] != mv[i][j] * s[j]:
                    return False
    return True


@dataclass(frozen=True)
class ClusterMonomial:
    """A monomial in the cluster variables of one tracked seed."""

    vertex: TrackedSeed
    exponents: tuple  # nonnegative ints, one per cluster position

    def __post_init__(self):
        if len(self.exponents) != self.vertex.n:
            raise ValueError("exponent vector has wrong length")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")
        if not any(self.exponents):
            raise ValueError("at least one exponent must be positive")

    def value(self) -> LaurentPoly:
        out = LaurentPoly.one(self.vertex.n)
        for p, e in zip(self.vertex.seed.cluster, self.exponents):
            if e:
                out = out * p ** e
        return out


def vectors_of_monomial(m: ClusterMonomial):
    """d-, g-, f- and fbar-vectors of the monomial.

    All four are linear in the exponents.  fbar replaces the (zero) f-column
    of an initial cluster variable by -e_k; the initial positions are the
    zero columns of F, and which coordinate variable sits there is read off
    the D-matrix column, which equals -e_k exactly for initial entries.
    """
    t = m.vertex
    n = t.n
    dmat = d_matrix(t)
    d = [0] * n
    g = [0] * n
    f = [0] * n
    fbar = [0] * n
    for j, e in enumerate(m.exponents):
        if not e:
            continue
        f_col = [t.f[r][j] for r in range(n)]
        d_col = [dmat[r][j] for r in range(n)]
        g_col = [t.g[r][j] for r in range(n)]
        fbar_col = d_col if not any(f_col) else f_col
        for r in range(n):
            d[r] += e * d_col[r]
            g[r] += e * g_col[r]
            f[r] += e * f_col[r]
            fbar[r] += e * fbar_col[r]
    return {"d": tuple(d), "g": tuple(g), "f": tuple(f), "fbar": tuple(fbar)}
