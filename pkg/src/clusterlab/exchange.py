"""Skew-symmetrizable exchange matrices, seeds, and mutation.

Mutation directions are 1-based in every public signature (matching the
usual indexing of matrix rows by 1..n); internal arithmetic is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotSkewSymmetrizableError
from .laurent import LaurentPoly, divide_exact


def _pos(x):
    return x if x > 0 else 0


def find_skew_symmetrizer(b):
    """Minimal positive integer diagonal S with S B skew-symmetric.

    Ratios s_j/s_i are forced along every pair with b_ij != 0; they are
    propagated through a spanning forest of that graph and then verified
    globally.  Raises NotSkewSymmetrizableError when no diagonal exists.
    """
    n = len(b)
    for i in range(n):
        if len(b[i]) != n:
            raise ValueError("matrix must be square")
        if b[i][i] != 0:
            raise NotSkewSymmetrizableError(f"nonzero diagonal entry at {i + 1}")
        for j in range(n):
            if (b[i][j] != 0) != (b[j][i] != 0):
                raise NotSkewSymmetrizableError(
                    f"support asymmetry at ({i + 1},{j + 1})")
            if b[i][j] != 0 and b[i][j] * b[j][i] > 0:
                raise NotSkewSymmetrizableError(
                    f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) share a sign")

    s = [None] * n
    for root in range(n):
        if s[root] is not None:
            continue
        s[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if b[i][j] != 0 and s[j] is None:
                    # s_i b_ij = -s_j b_ji  =>  s_j = -s_i b_ij / b_ji
                    s[j] = -s[i] * b[i][j] / Fraction(b[j][i])
                    stack.append(j)
    # clear denominators per component, then reduce each component by its gcd
    comp = _components(b, n)
    out = [0] * n
    for members in comp:
        denoms = 1
        for i in members:
            denoms = denoms * s[i].denominator // gcd(denoms, s[i].denominator)
        vals = [int(s[i] * denoms) for i in members]
        g = 0
        for v in vals:
            g = gcd(g, v)
        for i, v in zip(members, vals):
            out[i] = v // g
    for i in range(n):
        for j in range(n):
            if out[i] * b[i][j] != -out[j] * b[j][i]:
                raise NotSkewSymmetrizableError(
                    f"ratio conflict at ({i + 1},{j + 1})")
    return tuple(out)


def _components(b, n):
    seen = [False] * n
    comps = []
    for root in range(n):
        if seen[root]:
            continue
        members = []
        stack = [root]
        seen[root] = True
        while stack:
            i = stack.pop()
            members.append(i)
            for j in range(n):
                if b[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(members))
    return comps


@dataclass(frozen=True)
class ExchangeMatrix:
    """An n x n skew-symmetrizable integer matrix with zero diagonal."""

    b: tuple  # tuple of row tuples

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.b)
        object.__setattr__(self, "b", rows)
        find_skew_symmetrizer(rows)  # raises if not skew-symmetrizable

    @property
    def n(self):
        return len(self.b)

    def skew_symmetrizer(self):
        return find_skew_symmetrizer(self.b)

    def entry(self, i, j):
        """Entry b_{ij} with 1-based indices."""
        return self.b[i - 1][j - 1]

    def column(self, k):
        """Column k (1-based) as a tuple."""
        return tuple(row[k - 1] for row in self.b)

    def to_json(self):
        return json.dumps({"n": self.n, "B": [list(r) for r in self.b]})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        rows = data["B"]
        if data.get("n", len(rows)) != len(rows):
            raise ValueError("declared size does not match the matrix")
        return cls(tuple(tuple(r) for r in rows))


def mutate_matrix(m: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction k (1-based)."""
    n = m.n
    if not 1 <= k <= n:
        raise IndexError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    b = m.b
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                new[i][j] = -b[i][j]
            else:
                new[i][j] = b[i][j] + _pos(b[i][kk]) * b[kk][j] \
                    + b[i][kk] * _pos(-b[kk][j])
    return ExchangeMatrix(tuple(tuple(r) for r in new))


def cartan_counterpart(m: ExchangeMatrix):
    """Generalized Cartan matrix: 2 on the diagonal, -|b_ij| off it."""
    n = m.n
    return [[2 if i == j else -abs(m.b[i][j]) for j in range(n)]
            for i in range(n)]


def langlands_dual(m: ExchangeMatrix) -> ExchangeMatrix:
    """The negative transpose; swaps the roles of rows and columns of S."""
    n = m.n
    return ExchangeMatrix(tuple(tuple(-m.b[j][i] for j in range(n))
                                for i in range(n)))


def dual_symmetrizer(s):
    """Minimal skew-symmetrizer of B^v given one of B: proportional to 1/s_i."""
    lcm = 1
    for v in s:
        lcm = lcm * v // gcd(lcm, v)
    vals = [lcm // v for v in s]
    g = 0
    for v in vals:
        g = gcd(g, v)
    return tuple(v // g for v in vals)


@dataclass(frozen=True)
class Seed:
    """Exchange matrix plus the cluster, expanded in the initial variables."""

    matrix: ExchangeMatrix
    cluster: tuple  # tuple[LaurentPoly, ...]

    @classmethod
    def initial(cls, matrix: ExchangeMatrix) -> "Seed":
        n = matrix.n
        return cls(matrix, tuple(LaurentPoly.variable(n, i) for i in range(n)))

    def cluster_key(self):
        """Unordered fingerprint of the cluster, for seed deduplication."""
        return frozenset(self.cluster)


def mutate_seed(s: Seed, k: int) -> Seed:
    """Seed mutation: replaces cluster entry k via the exchange relation.

    The division by the old variable is exact Laurent division; a failure
    there would falsify the Laurent phenomenon and signals a bug.
    """
    n = s.matrix.n
    if not 1 <= k <= n:
        raise IndexError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    col = [s.matrix.b[i][kk] for i in range(n)]
    plus = LaurentPoly.one(n)
    minus = LaurentPoly.one(n)
    for i in range(n):
        if col[i] > 0:
            plus = plus * s.cluster[i] ** col[i]
        elif col[i] < 0:
            minus = minus * s.cluster[i] ** (-col[i])
    new_entry = divide_exact(plus + minus, s.cluster[kk])
    cluster = list(s.cluster)
    cluster[kk] = new_entry
    return Seed(mutate_matrix(s.matrix, k), tuple(cluster))


def parse_mutation_sequence(text):
    """Comma-separated 1-based directions -> list of ints."""
    if not text.strip():
        return []
    return [int(tok) for tok in text.split(",")]
