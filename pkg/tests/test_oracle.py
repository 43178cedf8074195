import random

import numpy as np
import pytest

from agb import (CodeChain, FieldMatrix, SearchBudget, code, dual,
                 empirical_hstar, field, find_isometry_vector, min_distance,
                 rref, weight_hierarchy)
from agb.errors import BudgetExceeded
from agb.evalcode import chain_matrix
from agb.oracle import gaussian_binomial


def all_codewords(fld, rows):
    """Plain nested-loop enumeration; the oracle for the oracle."""
    from itertools import product
    rows = np.asarray(rows, dtype=np.int32)
    out = []
    for msg in product(range(fld.q), repeat=rows.shape[0]):
        v = np.zeros(rows.shape[1], dtype=np.int32)
        for lam, row in zip(msg, rows):
            if lam:
                v = fld.add_arrays(v, fld.scale_array(lam, row))
        out.append(v)
    return out


def test_repetition_code():
    f4 = field(2, 2)
    M = FieldMatrix(f4, [[1] * 8])
    assert min_distance(M) == 8


def test_full_space():
    f4 = field(2, 2)
    M = FieldMatrix(f4, np.eye(8, dtype=np.int32))
    assert min_distance(M) == 1


def test_min_distance_matches_naive_enumeration():
    rng = random.Random(808)
    for p, k, n, dim in ((2, 2, 6, 3), (3, 2, 5, 2), (2, 1, 7, 4)):
        fld = field(p, k)
        rows = [[rng.randrange(fld.q) for _ in range(n)] for _ in range(dim)]
        M = FieldMatrix(fld, rows)
        if rref(M).rank == 0:
            continue
        fast = min_distance(M)
        slow = min(int((v != 0).sum()) for v in all_codewords(fld, rows)
                   if v.any())
        assert fast == slow


def test_min_distance_dependent_rows_are_fine():
    f4 = field(2, 2)
    M = FieldMatrix(f4, [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]])
    assert min_distance(M) == 2


def test_min_distance_budget():
    f9 = field(3, 2)
    M = FieldMatrix(f9, np.eye(8, dtype=np.int32))
    with pytest.raises(BudgetExceeded) as exc:
        min_distance(M, SearchBudget(max_codewords=100))
    assert exc.value.required == 9 ** 8


def test_min_distance_zero_code_rejected():
    f4 = field(2, 2)
    with pytest.raises(ValueError):
        min_distance(FieldMatrix.zeros(f4, 2, 5))


def test_hermitian_code_distance_against_bounds(herm2_table):
    from agb import d_star
    hs = empirical_hstar(herm2_table)
    for m in range(10):
        c = code(herm2_table, m)
        if c.dimension == 0:
            continue
        d_true = min_distance(c.matrix)
        assert d_true >= d_star(hs, c.dimension)
        if m < 8:
            assert d_true >= 8 - m


def test_gaussian_binomial():
    assert gaussian_binomial(5, 2, 4) == 5797
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 4, 3) == 1


def test_weight_hierarchy_r1_is_min_distance(herm2_table):
    for m in (3, 4, 5):
        c = code(herm2_table, m)
        assert weight_hierarchy(c.matrix, 1) == min_distance(c.matrix)


def test_weight_hierarchy_full_rank_is_support(herm2_table):
    c = code(herm2_table, 5)
    red = rref(c.matrix)
    support = int((red.matrix.data[: red.rank] != 0).any(axis=0).sum())
    assert weight_hierarchy(c.matrix, red.rank) == support


def test_weight_hierarchy_matches_naive_subspace_scan():
    # dimension-2 code over GF(4): enumerate all 1-dim subspaces by hand
    fld = field(2, 2)
    rows = [[1, 0, 1, 2, 3], [0, 1, 1, 1, 0]]
    M = FieldMatrix(fld, rows)
    words = [v for v in all_codewords(fld, rows) if v.any()]
    d1 = min(int((v != 0).sum()) for v in words)
    assert weight_hierarchy(M, 1) == d1
    d2 = int((np.stack(rows) != 0).any(axis=0).sum())
    assert weight_hierarchy(M, 2) == d2


def test_weight_hierarchy_is_strictly_increasing(herm2_table):
    c = code(herm2_table, 5)  # dimension 5
    values = [weight_hierarchy(c.matrix, r) for r in range(1, 6)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] <= 8


def test_weight_hierarchy_budget(herm2_table):
    c = code(herm2_table, 9)
    with pytest.raises(BudgetExceeded):
        weight_hierarchy(c.matrix, 4, SearchBudget(max_subspaces=10))


def test_dual_rank_nullity(herm2_table):
    for m in range(10):
        c = code(herm2_table, m)
        D = dual(c.matrix)
        assert D.nrows == 8 - c.dimension
        # orthogonality
        fld = herm2_table.field
        for i in range(c.matrix.nrows):
            for j in range(D.nrows):
                assert fld.dot(c.matrix.data[i], D.data[j]) == 0


def test_dual_of_full_space_is_zero():
    f4 = field(2, 2)
    M = FieldMatrix(f4, np.eye(5, dtype=np.int32))
    assert dual(M).nrows == 0


def test_bidual_identity():
    rng = random.Random(2717)
    f9 = field(3, 2)
    rows = [[rng.randrange(9) for _ in range(6)] for _ in range(3)]
    M = FieldMatrix(f9, rows)
    dd = dual(dual(M))
    a, b = rref(M), rref(dd)
    assert a.matrix.data[: a.rank].tolist() == b.matrix.data[: b.rank].tolist()


def test_isometry_vector_hermitian(herm2_table):
    chain = CodeChain(herm2_table.field, chain_matrix(herm2_table).data)
    x = find_isometry_vector(chain)
    assert x is not None
    assert len(x) == 8
    assert all(v != 0 for v in x)
    assert empirical_hstar(herm2_table).is_isometry_dual()


def test_isometry_scaling_preserves_weight(herm2_table):
    fld = herm2_table.field
    chain = CodeChain(fld, chain_matrix(herm2_table).data)
    x = np.array(find_isometry_vector(chain), dtype=np.int32)
    rng = random.Random(1)
    for _ in range(100):
        v = np.array([rng.randrange(4) for _ in range(8)], dtype=np.int32)
        assert int((fld.star(x, v) != 0).sum()) == int((v != 0).sum())


def test_isometry_maps_chain_to_mirror_duals(herm2_table):
    fld = herm2_table.field
    basis = chain_matrix(herm2_table).data
    chain = CodeChain(fld, basis)
    x = np.array(find_isometry_vector(chain), dtype=np.int32)
    n = 8
    for i in range(0, n + 1):
        scaled = np.stack([fld.star(x, basis[a]) for a in range(i)]) \
            if i else np.zeros((0, n), dtype=np.int32)
        mirror = dual(FieldMatrix(fld, basis[: n - i])) if n - i else \
            FieldMatrix(fld, np.eye(n, dtype=np.int32))
        left = rref(FieldMatrix(fld, scaled)) if i else None
        right = rref(mirror)
        if i:
            assert left.rank == right.rank == i
            assert left.matrix.data[: i].tolist() == \
                right.matrix.data[: i].tolist()


def test_isometry_dual_transport(herm2_table):
    # a witness carrying C onto D also carries the dual of D onto the dual of C
    fld = herm2_table.field
    basis = chain_matrix(herm2_table).data
    chain = CodeChain(fld, basis)
    x = np.array(find_isometry_vector(chain), dtype=np.int32)
    C = FieldMatrix(fld, basis[:3])
    D = FieldMatrix(fld, np.stack([fld.star(x, row) for row in basis[:3]]))
    lhs_rows = [fld.star(x, row) for row in dual(D).data]
    lhs = rref(FieldMatrix(fld, np.stack(lhs_rows)))
    rhs = rref(dual(C))
    assert lhs.matrix.data[: lhs.rank].tolist() == \
        rhs.matrix.data[: rhs.rank].tolist()


def test_isometry_absent_for_identity_chain():
    fld = field(2, 2)
    chain = CodeChain(fld, np.eye(3, dtype=np.int32))
    assert find_isometry_vector(chain) is None


def test_isometry_trivial_length_one():
    fld = field(2, 2)
    chain = CodeChain(fld, np.array([[1]], dtype=np.int32))
    assert find_isometry_vector(chain) == (1,)


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("AGB_BUDGET_CODEWORDS", "1234")
    monkeypatch.setenv("AGB_BUDGET_SUBSPACES", "77")
    b = SearchBudget.from_env()
    assert b.max_codewords == 1234
    assert b.max_subspaces == 77
    monkeypatch.delenv("AGB_BUDGET_CODEWORDS")
    monkeypatch.delenv("AGB_BUDGET_SUBSPACES")
    b2 = SearchBudget.from_env()
    assert b2.max_codewords == 1 << 26


def naive_weight_hierarchy(fld, rows, r):
    """Literal per-candidate enumeration of canonical subspace bases."""
    from itertools import combinations, product
    rows = np.asarray(rows, dtype=np.int32)
    k, n = rows.shape
    best = n + 1
    for pivots in combinations(range(k), r):
        pivot_set = set(pivots)
        free = [(i, j) for i in range(r)
                for j in range(pivots[i] + 1, k) if j not in pivot_set]
        for vals in product(range(fld.q), repeat=len(free)):
            coeffs = np.zeros((r, k), dtype=np.int32)
            for i, c in enumerate(pivots):
                coeffs[i, c] = 1
            for (i, j), v in zip(free, vals):
                coeffs[i, j] = v
            basis = fld.matmul(coeffs, rows)
            support = int((basis != 0).any(axis=0).sum())
            if support < best:
                best = support
    return best


def test_weight_hierarchy_gf9_matches_naive():
    rng = random.Random(909)
    fld = field(3, 2)
    rows = [[rng.randrange(9) for _ in range(7)] for _ in range(3)]
    M = FieldMatrix(fld, rows)
    k = rref(M).rank
    for r in range(1, k + 1):
        assert weight_hierarchy(M, r) == \
            naive_weight_hierarchy(fld, rref(M).matrix.data[:k], r)


def test_weight_hierarchy_gf4_matches_naive(herm2_table):
    c = code(herm2_table, 4)
    red = rref(c.matrix)
    rows = red.matrix.data[: red.rank]
    for r in range(1, red.rank + 1):
        assert weight_hierarchy(c.matrix, r) == \
            naive_weight_hierarchy(herm2_table.field, rows, r)
