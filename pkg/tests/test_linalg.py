"""Exact linear algebra kernel: rank/kernel/solve/contract.

The rank oracle is a second, independent elimination with permuted row
order; solve and kernel are checked by multiplying back.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from hopflab.fields import QQ, PrimeField
from hopflab.linalg import (DimensionError, Matrix, Tensor, contract,
                            kernel_basis, mat_mul, mat_vec, rank, solve)
from hopflab.catalog import sweedler_h4, sigma_t


def rank_oracle(m, order):
    """Row-echelon rank with externally supplied row order."""
    rows = [list(m.data[i]) for i in order]
    cols = m.cols
    rk = 0
    for pc in range(cols):
        piv = None
        for r in range(rk, len(rows)):
            if rows[r][pc]:
                piv = r
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        fp = rows[rk][pc]
        for r in range(rk + 1, len(rows)):
            if rows[r][pc]:
                mult = rows[r][pc] / fp
                rows[r] = [a - b * mult for a, b in zip(rows[r], rows[rk])]
        rk += 1
    return rk


def rand_matrix(rng, field, rows, cols, lo=-5, hi=5):
    return Matrix(field, rows, cols,
                  [[field.from_int(rng.randint(lo, hi)) for _ in range(cols)]
                   for _ in range(rows)])


def test_rank_identity_and_zero():
    assert rank(Matrix.identity(QQ, 2)) == 2
    assert rank(Matrix.zeros(QQ, 3, 3)) == 0


def test_rank_sigma_matrix_cross_checked():
    h4 = sweedler_h4(QQ)
    m = sigma_t(h4, 1).sigma
    r = rank(m)
    rng = random.Random(7)
    for _ in range(5):
        order = list(range(m.rows))
        rng.shuffle(order)
        assert rank_oracle(m, order) == r
    assert r == 2  # two distinct nonzero row patterns


def test_kernel_identity_and_zero():
    assert kernel_basis(Matrix.identity(QQ, 3)).cols == 0
    k = kernel_basis(Matrix.zeros(QQ, 4, 4))
    assert k.cols == 4
    assert k == Matrix.identity(QQ, 4)


def test_kernel_of_rank3_matrix_multiply_back():
    rng = random.Random(3)
    # a 4x6 matrix of rank 3: product of random 4x3 and 3x6 full-rank pieces
    while True:
        a = rand_matrix(rng, QQ, 4, 3)
        b = rand_matrix(rng, QQ, 3, 6)
        m = mat_mul(a, b)
        if rank(a) == 3 and rank(b) == 3:
            break
    assert rank(m) == 3
    ker = kernel_basis(m)
    assert ker.cols == 3
    for j in range(ker.cols):
        assert not any(mat_vec(m, ker.column(j)))


def test_solve_identity():
    b = Matrix(QQ, 3, 1, [[QQ.from_int(5)], [QQ.from_int(-2)],
                          [QQ.from_int(7)]])
    x = solve(Matrix.identity(QQ, 3), b)
    assert x == b


def test_solve_inconsistent_returns_none():
    # column space of m is spanned by (1,1); b = (1,0) lies outside
    one = QQ.one
    m = Matrix(QQ, 2, 2, [[one, one], [one, one]])
    b = Matrix(QQ, 2, 1, [[one], [QQ.zero]])
    assert solve(m, b) is None


def test_solve_h4_antipode_multiply_back():
    h4 = sweedler_h4(QQ)
    m = h4.antipode
    b = Matrix(QQ, 4, 1, [[x] for x in h4.unit])
    x = solve(m, b)
    assert x is not None
    assert mat_vec(m, x.column(0)) == h4.unit


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve(Matrix.identity(QQ, 2), Matrix.zeros(QQ, 3, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 10 ** 6),
       st.sampled_from(["Q", "F5", "F13"]))
def test_rank_nullity_random(rows, cols, seed, fkind):
    field = {"Q": QQ, "F5": PrimeField(5), "F13": PrimeField(13)}[fkind]
    rng = random.Random(seed)
    m = rand_matrix(rng, field, rows, cols)
    assert rank(m) + kernel_basis(m).cols == cols


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(0, 10 ** 6))
def test_solve_multiply_back_random(n, seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, QQ, n, n)
    x_true = rand_matrix(rng, QQ, n, 1)
    b = mat_mul(m, x_true)
    x = solve(m, b)
    assert x is not None
    assert mat_mul(m, x) == b


def test_contract_matrix_vector():
    rng = random.Random(1)
    a = Tensor(QQ, (3, 4), [QQ.from_int(rng.randint(-3, 3))
                            for _ in range(12)])
    v = Tensor(QQ, (4,), [QQ.from_int(rng.randint(-3, 3)) for _ in range(4)])
    out = contract(a, v, [(1, 0)])
    assert out.shape == (3,)
    for i in range(3):
        want = sum((a.at(i, j) * v.at(j) for j in range(4)), QQ.zero)
        assert out.at(i) == want


def test_contract_counit_axiom_gives_identity():
    h4 = sweedler_h4(QQ)
    eps = Tensor(QQ, (4,), list(h4.counit))
    out = contract(h4.comult, eps, [(2, 0)])
    assert out.shape == (4, 4)
    ident = Matrix.identity(QQ, 4)
    assert [out.at(i, j) for i in range(4) for j in range(4)] == \
        ident.entries


def test_contract_no_pairs_is_outer_product():
    a = Tensor(QQ, (2,), [QQ.one, QQ.from_int(2)])
    b = Tensor(QQ, (3,), [QQ.from_int(k) for k in (1, 0, -1)])
    out = contract(a, b, [])
    assert out.shape == (2, 3)
    assert out.at(1, 2) == QQ.from_int(-2)


def test_contract_two_steps_equal_one():
    rng = random.Random(9)
    a = Tensor(QQ, (2, 3), [QQ.from_int(rng.randint(-3, 3))
                            for _ in range(6)])
    b = Tensor(QQ, (3, 2), [QQ.from_int(rng.randint(-3, 3))
                            for _ in range(6)])
    c = Tensor(QQ, (2, 2), [QQ.from_int(rng.randint(-3, 3))
                            for _ in range(4)])
    ab = contract(a, b, [(1, 0)])      # shape (2, 2)
    ab_c = contract(ab, c, [(1, 0)])   # contract over disjoint axes stepwise
    bc = contract(b, c, [(1, 0)])
    a_bc = contract(a, bc, [(1, 0)])
    assert ab_c == a_bc


def test_contract_shape_mismatch():
    a = Tensor(QQ, (2, 3), [QQ.zero] * 6)
    b = Tensor(QQ, (2, 2), [QQ.zero] * 4)
    with pytest.raises(DimensionError):
        contract(a, b, [(1, 0)])
