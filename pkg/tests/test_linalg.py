"""Exact matrices and row reduction."""

from fractions import Fraction

import pytest

from equivar.linalg import (
    Echelon,
    RatMatrix,
    block_diag,
    kernel_basis,
    rank,
    rref,
    solve_free_zero,
)


def F(n, d=1):
    return Fraction(n, d)


def test_matmul_and_identity():
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    i = RatMatrix.identity(2)
    assert a @ i == a
    assert i @ a == a
    b = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert a @ b == RatMatrix.from_rows([[2, 1], [4, 3]])


def test_transpose():
    a = RatMatrix.from_rows([[0, -1], [1, 0]])
    assert a.transpose() == RatMatrix.from_rows([[0, 1], [-1, 0]])
    sym = RatMatrix.from_rows([[1, 2], [2, 5]])
    assert sym.transpose() == sym


def test_inverse_round_trip():
    a = RatMatrix.from_rows([[1, 2], [3, 5]])
    assert a @ a.inverse() == RatMatrix.identity(2)
    assert a.inverse() @ a == RatMatrix.identity(2)


def test_inverse_rational_entries():
    a = RatMatrix.from_rows([[2]])
    assert a.inverse() == RatMatrix.from_rows([[Fraction(1, 2)]])


def test_singular_raises():
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [2, 4]]).inverse()
    assert not RatMatrix.from_rows([[0]]).is_invertible()


def test_apply():
    a = RatMatrix.from_rows([[0, -1], [1, 0]])
    assert a.apply([F(1), F(2)]) == (F(-2), F(1))


def test_block_diag():
    a = RatMatrix.from_rows([[2]])
    b = RatMatrix.from_rows([[0, 1], [1, 0]])
    d = block_diag(a, b)
    assert d.rows == 3 and d.cols == 3
    assert d[0, 0] == 2 and d[1, 2] == 1 and d[2, 1] == 1 and d[0, 1] == 0


def test_rref_and_rank():
    rows = [[F(1), F(2), F(1)], [F(2), F(4), F(2)], [F(0), F(1), F(1)]]
    red, pivots = rref(rows)
    assert pivots == [0, 1]
    assert rank(rows) == 2
    # pivot columns are clean unit columns
    assert red[0][0] == 1 and red[1][1] == 1 and red[0][1] == 0


def test_kernel_basis():
    # x + z = 0, y + z = 0 -> kernel spanned by (-1, -1, 1)
    rows = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    basis = kernel_basis(rows, 3)
    assert basis == [[F(-1), F(-1), F(1)]]
    for v in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_free_zero_prefers_early_columns():
    # columns 0 and 1 are identical; the free (later) one stays zero
    rows = [[F(1), F(1), F(0)], [F(0), F(0), F(1)]]
    sol = solve_free_zero(rows, [F(3), F(5)])
    assert sol == [F(3), F(0), F(5)]


def test_solve_inconsistent_returns_none():
    rows = [[F(1), F(0)], [F(1), F(0)]]
    assert solve_free_zero(rows, [F(1), F(2)]) is None


def test_echelon_incremental():
    e = Echelon()
    assert e.add([F(1), F(1), F(0)])
    assert not e.add([F(2), F(2), F(0)])
    assert e.add([F(0), F(1), F(1)])
    assert e.rank == 2
    assert e.contains([F(1), F(0), F(-1)])
    assert not e.contains([F(0), F(0), F(1)])
