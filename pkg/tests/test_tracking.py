import itertools
import random

import pytest

from clusterlab.exchange import ExchangeMatrix
from clusterlab.tracking import (
    ClusterMonomial, TrackedSeed, check_langlands_dualities,
    check_tropical_duality, d_matrix, mutate_tracked, run_walk,
    vectors_of_monomial,
)

A2 = ExchangeMatrix(((0, 1), (-1, 0)))
C2 = ExchangeMatrix(((0, 1), (-2, 0)))
C3 = ExchangeMatrix(((0, 1, 0), (-2, 0, 1), (0, -1, 0)))


def test_root_conditions():
    t = TrackedSeed.initial(A2)
    assert t.c == ((1, 0), (0, 1))
    assert t.g == ((1, 0), (0, 1))
    assert t.f == ((0, 0), (0, 0))
    assert check_tropical_duality(t)


def test_first_step_c_and_f_columns():
    for matrix in (A2, C2, C3):
        n = matrix.n
        for k in range(1, n + 1):
            t = mutate_tracked(TrackedSeed.initial(matrix), k)
            c_col = tuple(t.c[r][k - 1] for r in range(n))
            f_col = tuple(t.f[r][k - 1] for r in range(n))
            e_k = tuple(1 if r == k - 1 else 0 for r in range(n))
            assert c_col == tuple(-x for x in e_k)
            assert f_col == e_k


def test_a2_g_vector_after_mu1():
    t = mutate_tracked(TrackedSeed.initial(A2), 1)
    assert tuple(t.g[r][0] for r in range(2)) == (-1, 1)
    assert check_tropical_duality(t)


def test_d_matrix_walks():
    assert d_matrix(TrackedSeed.initial(A2)) == [[-1, 0], [0, -1]]
    t = run_walk(A2, [1])
    assert d_matrix(t) == [[1, 0], [0, -1]]
    t = run_walk(A2, [1, 2])
    assert d_matrix(t) == [[1, 1], [0, 1]]


def test_duality_along_all_a2_walks():
    for length in range(7):
        for walk in itertools.product((1, 2), repeat=length):
            t = run_walk(A2, walk)
            assert check_tropical_duality(t)


def test_duality_random_c3_walks():
    rng = random.Random(3)
    for _ in range(100):
        t = TrackedSeed.initial(C3)
        for _ in range(15):
            t = mutate_tracked(t, rng.randint(1, 3))
            assert check_tropical_duality(t)


def test_langlands_dualities_c2_short_walks():
    assert check_langlands_dualities([], C2)
    for length in range(1, 7):
        for walk in itertools.product((1, 2), repeat=length):
            assert check_langlands_dualities(walk, C2)


def test_langlands_degenerates_for_skew_symmetric():
    from clusterlab.exchange import langlands_dual
    for walk in itertools.product((1, 2), repeat=4):
        t = run_walk(A2, walk)
        tv = run_walk(langlands_dual(A2), walk)
        assert t.f == tv.f and t.c == tv.c


def test_monomial_vectors_at_root():
    t = TrackedSeed.initial(A2)
    m = ClusterMonomial(t, (1, 1))
    v = vectors_of_monomial(m)
    assert v["d"] == (-1, -1)
    assert v["f"] == (0, 0)
    assert v["fbar"] == (-1, -1)
    assert v["g"] == (1, 1)


def test_monomial_square_after_mu1():
    t = run_walk(A2, [1])
    m = ClusterMonomial(t, (2, 0))
    assert vectors_of_monomial(m)["d"] == (2, 0)


def test_monomial_validation():
    t = TrackedSeed.initial(A2)
    with pytest.raises(ValueError):
        ClusterMonomial(t, (0, 0))
    with pytest.raises(ValueError):
        ClusterMonomial(t, (1, -1))


def test_monomial_value():
    t = run_walk(A2, [1])
    m = ClusterMonomial(t, (1, 1))
    prod = m.value()
    assert prod == t.seed.cluster[0] * t.seed.cluster[1]


def test_f_equals_d_for_non_initial_finite_type():
    for matrix in (A2, C2):
        for walk in itertools.product(range(1, matrix.n + 1), repeat=5):
            t = run_walk(matrix, walk)
            dm = d_matrix(t)
            for j in range(matrix.n):
                f_col = tuple(t.f[r][j] for r in range(matrix.n))
                if any(f_col):  # non-initial entry
                    assert f_col == tuple(dm[r][j] for r in range(matrix.n))


def test_c_and_g_matrices_unimodular_along_walks():
    from clusterlab import linalg
    rng = random.Random(5)
    for matrix in (A2, C2, C3):
        for _ in range(30):
            t = TrackedSeed.initial(matrix)
            for _ in range(10):
                t = mutate_tracked(t, rng.randint(1, matrix.n))
                assert linalg.det([list(r) for r in t.c]) in (1, -1)
                assert linalg.det([list(r) for r in t.g]) in (1, -1)


def test_f_column_zero_iff_initial_entry():
    # F columns stay nonnegative; a column vanishes exactly when the
    # cluster entry is a coordinate monomial
    for matrix in (A2, C2):
        for walk in itertools.product(range(1, matrix.n + 1), repeat=5):
            t = run_walk(matrix, walk)
            for j in range(matrix.n):
                f_col = [t.f[r][j] for r in range(matrix.n)]
                assert all(x >= 0 for x in f_col)
                entry = t.seed.cluster[j]
                is_coordinate = entry.is_monomial() and \
                    sorted(entry.terms()[0][0]) == [0] * (matrix.n - 1) + [1]
                assert (not any(f_col)) == is_coordinate


def test_non_initial_d_vectors_nonnegative():
    for matrix in (A2, C2, C3):
        for walk in itertools.product(range(1, matrix.n + 1), repeat=4):
            t = run_walk(matrix, walk)
            dm = d_matrix(t)
            for j in range(matrix.n):
                if any(t.f[r][j] for r in range(matrix.n)):
                    assert all(dm[r][j] >= 0 for r in range(matrix.n))


def test_different_monomials_different_g_vectors():
    # exhaustive on A2 and C2 up to degree 2, with monomials deduplicated
    # as formal products of distinct variables
    from clusterlab.explore import enumerate_monomials, explore, monomial_vectors
    for matrix in (A2, C2):
        graph = explore(matrix)
        seen = {}
        for key, vid, exps in enumerate_monomials(graph, 2):
            g = monomial_vectors(graph, key)["g"]
            assert g not in seen or seen[g] == key
            seen[g] = key


def test_matrix_mutation_commutes_with_dual():
    from clusterlab.exchange import langlands_dual, mutate_matrix
    rng = random.Random(9)
    for matrix in (A2, C2, C3):
        for k in range(1, matrix.n + 1):
            assert langlands_dual(mutate_matrix(matrix, k)) == \
                mutate_matrix(langlands_dual(matrix), k)
