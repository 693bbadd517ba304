import pytest

from clusterlab.exchange import ExchangeMatrix, mutate_seed, Seed
from clusterlab.explore import (
    classify_finite_type, enumerate_monomials, explore, monomial_vectors,
    standard_matrix,
)

A2 = standard_matrix("A", 2)
A3 = standard_matrix("A", 3)
C2 = standard_matrix("C", 2)


def test_a2_closure_counts():
    g = explore(A2)
    assert g.complete
    assert g.cluster_count() == 5
    assert g.variable_count() == 5


def test_a2_d_vectors():
    g = explore(A2)
    dvs = sorted(info.d for info in g.variables)
    assert dvs == sorted([(-1, 0), (0, -1), (1, 0), (1, 1), (0, 1)])


def test_a3_closure_counts():
    g = explore(A3)
    assert g.complete and g.cluster_count() == 14 and g.variable_count() == 9


def test_c2_closure_counts():
    g = explore(C2)
    assert g.complete and g.cluster_count() == 6 and g.variable_count() == 6


def test_every_vertex_has_n_neighbors():
    for m in (A2, A3, C2):
        g = explore(m)
        for v in range(g.cluster_count()):
            assert len(g.neighbors(v)) == m.n


def test_exploration_order_independent():
    # depth-first closure oracle over unlabeled clusters
    def dfs_closure(matrix):
        root = Seed.initial(matrix)
        seen = {root.cluster_key()}
        stack = [root]
        while stack:
            s = stack.pop()
            for k in range(1, matrix.n + 1):
                s2 = mutate_seed(s, k)
                if s2.cluster_key() not in seen:
                    seen.add(s2.cluster_key())
                    stack.append(s2)
        return seen

    for m in (A2, C2, A3):
        g = explore(m)
        bfs_keys = {frozenset(g.variables[i].poly for i in vert)
                    for vert in g.vertices}
        assert bfs_keys == dfs_closure(m)


def test_truncation_reports_incomplete():
    g = explore(A3, max_seeds=3)
    assert not g.complete


def test_classify_a2():
    assert str(classify_finite_type(A2)) == "A2"


def test_classify_c2():
    assert str(classify_finite_type(C2)) == "C2"


def test_classify_infinite():
    m = ExchangeMatrix(((0, 2), (-2, 0)))
    assert classify_finite_type(m, depth=6).series.startswith("not finite")


def test_classify_needs_mutation():
    # a cyclically oriented triangle is type A3 but only after one mutation
    m = ExchangeMatrix(((0, 1, -1), (-1, 0, 1), (1, -1, 0)))
    assert str(classify_finite_type(m)) == "A3"


def test_enumerate_monomials_counts():
    g = explore(A2)
    assert sum(1 for _ in enumerate_monomials(g, 1)) == 5
    # degree <= 2: 5 variables plus 10 distinct quadratic monomials
    # (5 squares each shared by two clusters, 5 compatible products)
    keys = list(enumerate_monomials(g, 2))
    brute = set()
    for vid, vert in enumerate(g.vertices):
        a, b = vert
        brute |= {((a, 1),), ((b, 1),), ((a, 2),), ((b, 2),),
                  tuple(sorted([(a, 1), (b, 1)]))}
    assert len(keys) == len(brute)
    assert sum(1 for _ in enumerate_monomials(g, 0)) == 0


def test_monomial_vector_linearity():
    g = explore(A2)
    for key, vid, exps in enumerate_monomials(g, 2):
        v = monomial_vectors(g, key)
        manual_d = [0, 0]
        for var_id, e in key:
            for r in range(2):
                manual_d[r] += e * g.variables[var_id].d[r]
        assert v["d"] == tuple(manual_d)


def test_explore_rejects_bad_bound():
    with pytest.raises(ValueError):
        explore(A2, max_seeds=0)


def test_closure_counts_against_golden_file():
    # the golden file was produced by this same closure oracle and pins the
    # counts against regressions
    import json
    import pathlib

    golden = json.loads(
        (pathlib.Path(__file__).parent / "data" / "closure_goldens.json")
        .read_text())
    for name, expected in golden.items():
        series, rank = name[0], int(name[1:])
        g = explore(standard_matrix(series, rank))
        assert g.complete
        assert g.cluster_count() == expected["clusters"], name
        assert g.variable_count() == expected["variables"], name
