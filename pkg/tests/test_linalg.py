import random
from fractions import Fraction

from clusterlab import linalg


def det_naive(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det_naive(minor)
    return total


def test_int_rank_matches_fraction_rank():
    rng = random.Random(42)
    for _ in range(1500):
        rows = rng.randint(0, 7)
        cols = rng.randint(1, 7)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        fast = linalg.rank(m, cols)
        slow = len(linalg.rref([[Fraction(x) for x in r] for r in m], cols)[0])
        assert fast == slow, m


def test_int_rank_regression_full_rank_with_zero_pivot_entries():
    # needs the Bareiss rescaling even on rows whose pivot entry is zero
    m = [[0, -3, 2, 1, -3, -2], [3, 1, 2, 1, -2, 0], [0, -1, 0, -3, -2, 0],
         [1, 2, -2, 0, -3, -1], [-1, 2, 2, 2, 3, -2], [2, 2, -3, -3, -3, 2]]
    assert linalg.rank(m, 6) == 6


def test_det_matches_cofactor_expansion():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(0, 5)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert linalg.det(m) == det_naive(m), m


def test_nullspace_and_solve():
    a = [[1, 2, 3], [2, 4, 6]]
    basis = linalg.nullspace(a, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(row[i] * v[i] for i in range(3)) == 0 for row in a)
    x = linalg.solve([[2, 0], [0, 3]], [4, 9], 2)
    assert x == [Fraction(2), Fraction(3)]
    assert linalg.solve([[1], [1]], [1, 2], 1) is None


def test_quotient_projection_section():
    vectors = [[1, 0, 1], [0, 1, 1]]
    proj, sect = linalg.column_space_projection(vectors, 3)
    assert len(proj) == 1
    prod = linalg.mat_mul(proj, sect)
    assert prod == [[Fraction(1)]]
    # the subspace maps to zero
    for v in vectors:
        assert linalg.mat_vec(proj, v) == [0]
