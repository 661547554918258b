import numpy as np
import pytest

from modrep.linalg import (FieldCtx, Matrix, PolyMatrix, ResourceGuardError, _is_irreducible,
                           _rank_gf2_bits, _rank_table_np, field_ctx, find_irreducible,
                           generic_rank, inv_modp, kernel_modp, matmul_array, rank_array,
                           rref_modp, solve_modp, symbolic_rank)


def test_field_scalar_arithmetic():
    ctx = field_ctx(3, 2)
    for a in range(9):
        for b in range(9):
            s = ctx.add(a, b)
            assert ctx.add(s, ctx.neg(b)) == a
            if b != 0:
                assert ctx.mul(ctx.mul(a, b), ctx.inv(b)) == a
    # Frobenius: x -> x^p is additive
    for a in range(9):
        for b in range(9):
            assert ctx.pow(ctx.add(a, b), 3) == ctx.add(ctx.pow(a, 3), ctx.pow(b, 3))


def test_tables_match_scalar_ops():
    for p, k in [(2, 1), (2, 3), (3, 2), (5, 2), (7, 1)]:
        ctx = field_ctx(p, k)
        mul, add, neg, inv = ctx.tables
        for a in range(ctx.q):
            assert neg[a] == ctx.neg(a)
            if a:
                assert inv[a] == ctx.inv(a)
            for b in range(ctx.q):
                assert mul[a, b] == ctx.mul(a, b)
                assert add[a, b] == ctx.add(a, b)


def test_modulus_irreducible_and_deterministic():
    m1 = find_irreducible(3, 4, seed=0)
    m2 = find_irreducible(3, 4, seed=0)
    assert m1 == m2
    assert _is_irreducible(list(m1), 3)
    with pytest.raises(ValueError):
        FieldCtx(2, 2, modulus=(0, 0, 1))  # x^2 is reducible


def test_rank_trivial_cases():
    ctx = field_ctx(5)
    assert rank_array(np.eye(7, dtype=np.int64), ctx) == 7
    assert rank_array(np.zeros((4, 6), dtype=np.int64), ctx) == 0
    assert rank_array(np.array([[1, 1, 0], [1, 1, 0]]), field_ctx(2)) == 1


def test_rank_engines_agree():
    rng = np.random.default_rng(7)
    for p, k in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]:
        ctx = field_ctx(p, k)
        for _ in range(40):
            rows, cols = rng.integers(1, 25, size=2)
            m = rng.integers(0, ctx.q, size=(int(rows), int(cols))).astype(np.uint16)
            reference = _rank_table_np(m, ctx)
            assert rank_array(m, ctx) == reference
            if ctx.q == 2:
                assert _rank_gf2_bits(m) == reference


def test_rank_transpose_and_shuffle_invariance():
    rng = np.random.default_rng(11)
    for trial in range(500):
        p = [2, 3, 5][trial % 3]
        ctx = field_ctx(p)
        rows, cols = rng.integers(1, 20, size=2)
        m = rng.integers(0, p, size=(int(rows), int(cols)))
        r = rank_array(m, ctx)
        assert rank_array(m.T, ctx) == r
        assert rank_array(m[rng.permutation(int(rows))], ctx) == r


def test_matmul_and_inverse_modp():
    rng = np.random.default_rng(3)
    p = 5
    for _ in range(20):
        n = int(rng.integers(1, 12))
        m = rng.integers(0, p, size=(n, n))
        if rank_array(m, field_ctx(p)) < n:
            continue
        inv = inv_modp(m, p)
        assert np.array_equal(m @ inv % p, np.eye(n, dtype=np.int64))
        b = rng.integers(0, p, size=(n, 3))
        x = solve_modp(m, b, p)
        assert np.array_equal(m @ x % p, b % p)


def test_rref_and_kernel():
    p = 3
    m = np.array([[1, 2, 0], [2, 1, 0], [0, 0, 0]])
    ker = kernel_modp(m, p)
    assert ker.shape[0] == 1
    assert np.array_equal(m @ ker.T % p, np.zeros((3, 1), dtype=np.int64))
    _, pivots = rref_modp(m, p)
    assert pivots == [0, 1]


def test_polymatrix_evaluate_examples():
    ctx = field_ctx(2)
    pm = PolyMatrix.from_linear([np.array([[1]])], 2)
    assert pm.evaluate((0,), ctx).data[0, 0] == 0
    # regular module of the order-2 group: u(1) - 1 has rank 1
    a = np.array([[0, 1], [1, 0]])
    pm2 = PolyMatrix.from_linear([(a - np.eye(2, dtype=np.int64)) % 2], 2)
    assert pm2.evaluate((1,), ctx).rank() == 1
    const = PolyMatrix.constant(np.array([[1, 0], [1, 1]]), 3, 2)
    c3 = field_ctx(3)
    for point in [(0, 0), (1, 2), (2, 2)]:
        assert np.array_equal(const.evaluate(point, c3).data,
                              np.array([[1, 0], [1, 1]], dtype=np.uint16))


def test_evaluate_commutes_with_product():
    rng = np.random.default_rng(5)
    p, nvars = 3, 2
    ctx = field_ctx(p, 2)
    for _ in range(10):
        a = PolyMatrix.from_linear([rng.integers(0, p, size=(4, 4)) for _ in range(nvars)], p)
        b = PolyMatrix.from_linear([rng.integers(0, p, size=(4, 4)) for _ in range(nvars)], p)
        point = tuple(int(x) for x in rng.integers(0, ctx.q, size=nvars))
        lhs = (a @ b).evaluate(point, ctx).data
        rhs = matmul_array(a.evaluate(point, ctx).data, b.evaluate(point, ctx).data, ctx)
        assert np.array_equal(lhs, rhs)


def test_polymatrix_degree_bookkeeping():
    p = 3
    pm = PolyMatrix.from_linear([np.eye(3, dtype=np.int64)] * 2, p)
    assert pm.max_entry_degree() == 1
    assert pm.matpow(2).max_entry_degree() == 2
    assert pm.matpow(3).max_entry_degree() == 3


def test_generic_rank_bounds_and_determinism():
    rng = np.random.default_rng(0)
    mats = [rng.integers(0, 3, size=(5, 5)) for _ in range(3)]
    pm = PolyMatrix.from_linear(mats, 3)
    r1 = generic_rank(pm, seed=42)
    r2 = generic_rank(pm, seed=42)
    assert (r1.rank, r1.samples, r1.extension, r1.modulus) == (r2.rank, r2.samples, r2.extension, r2.modulus)
    assert r1.log2_failure_bound <= -40
    # rank at any sampled point cannot exceed the generic rank
    ctx = field_ctx(3, r1.extension)
    rng2 = np.random.default_rng(123)
    for _ in range(20):
        point = tuple(int(x) for x in rng2.integers(0, ctx.q, size=3))
        assert pm.evaluate(point, ctx).rank() <= r1.rank


def test_symbolic_rank_matches_generic():
    rng = np.random.default_rng(9)
    for p, nvars, d in [(2, 1, 3), (2, 2, 4), (3, 2, 4), (3, 3, 3), (5, 2, 5)]:
        mats = [rng.integers(0, p, size=(d, d)) for _ in range(nvars)]
        pm = PolyMatrix.from_linear(mats, p)
        assert symbolic_rank(pm) == generic_rank(pm, seed=1).rank
    # rank-deficient symbolic instance: repeated rows of polynomials
    row = [rng.integers(0, 3, size=(1, 4)) for _ in range(2)]
    stacked = [np.vstack([m, m, np.zeros((1, 4), dtype=np.int64)]) for m in row]
    pm = PolyMatrix.from_linear(stacked, 3)
    assert symbolic_rank(pm) == 1


def test_symbolic_rank_guard():
    pm = PolyMatrix.from_linear([np.zeros((65, 65), dtype=np.int64)], 3)
    with pytest.raises(ResourceGuardError):
        symbolic_rank(pm)


def test_matrix_wrapper():
    ctx = field_ctx(3, 2)
    m = Matrix(ctx, np.array([[1, 2], [3, 4]], dtype=np.uint16))
    assert m.rows == 2 and m.cols == 2
    assert (m @ m).data.shape == (2, 2)
