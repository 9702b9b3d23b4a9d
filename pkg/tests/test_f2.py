"""Linear algebra over F2."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverdef import f2
from quiverdef.f2 import F2Matrix


def random_matrix(rng, nrows, ncols):
    return F2Matrix([rng.getrandbits(ncols) for _ in range(nrows)], ncols)


def test_identity_and_zero():
    i3 = F2Matrix.identity(3)
    z = F2Matrix.zeros(3, 3)
    assert i3.rank() == 3
    assert z.is_zero()
    assert (i3 + i3).is_zero()
    assert (i3 @ i3).rows == i3.rows


def test_from_lists_round_trip():
    m = F2Matrix.from_lists([[1, 0, 1], [0, 1, 1]])
    assert m.to_lists() == [[1, 0, 1], [0, 1, 1]]
    assert m.transpose().to_lists() == [[1, 0], [0, 1], [1, 1]]


def test_mul_vec_matches_matmul():
    rng = random.Random(7)
    for _ in range(50):
        a = random_matrix(rng, 4, 5)
        v = rng.getrandbits(5)
        col = F2Matrix([(v >> j) & 1 for j in range(5)], 1)
        prod = a @ col
        expect = sum(((prod.rows[i] & 1) << i) for i in range(4))
        assert a.mul_vec(v) == expect


def test_rank_kernel_dimension_theorem():
    rng = random.Random(11)
    for _ in range(100):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, nr, nc)
        rank, kernel = f2.f2_rank_kernel(m)
        assert rank + len(kernel) == nc
        for v in kernel:
            assert m.mul_vec(v) == 0


def test_echelon_idempotent_and_canonical():
    rng = random.Random(13)
    for _ in range(50):
        vecs = [rng.getrandbits(8) for _ in range(6)]
        e1 = f2.echelon(vecs)
        assert f2.echelon(e1) == e1
        rng.shuffle(vecs)
        assert f2.echelon(vecs) == e1


def test_reduce_vector():
    basis = f2.echelon([0b101, 0b011])
    assert f2.reduce_vector(0b110, basis) == 0
    assert f2.reduce_vector(0b101, basis) == 0


def test_solve():
    rng = random.Random(17)
    for _ in range(100):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, nr, nc)
        x = rng.getrandbits(nc)
        b = m.mul_vec(x)
        sol = f2.f2_solve(m, b)
        assert sol is not None
        assert m.mul_vec(sol) == b


def test_solve_inconsistent():
    m = F2Matrix([0b1, 0b1], 1)
    assert f2.f2_solve(m, 0b01) is None


def test_intersect_echelon():
    a = f2.echelon([0b110, 0b001])
    b = f2.echelon([0b110, 0b010])
    inter = f2.intersect_echelon(a, b, 3)
    assert inter == f2.echelon([0b110])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5),
       st.randoms(use_true_random=False))
def test_matmul_associative(a, b, c, rng):
    m1 = random_matrix(rng, a, b)
    m2 = random_matrix(rng, b, c)
    m3 = random_matrix(rng, c, a)
    lhs = (m1 @ m2) @ m3
    rhs = m1 @ (m2 @ m3)
    assert lhs.rows == rhs.rows


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_rank_of_invertible(n, rng):
    m = random_matrix(rng, n, n)
    assert m.is_invertible() == (m.rank() == n)
