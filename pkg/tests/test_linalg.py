from fractions import Fraction

from hypothesis import given, strategies as st

from kpcat.linalg import (Echelon, SparseMatrix, nullspace, rank, rational_str,
                          solve, to_rational)

small = st.integers(-3, 3)
dense = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rational_strings():
    assert rational_str(Fraction(3, 4)) == "3/4"
    assert rational_str(Fraction(4, 2)) == "2"
    assert to_rational("-3/6") == Fraction(-1, 2)
    assert to_rational("7") == 7


def test_identity_and_product():
    A = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert A @ SparseMatrix.identity(2) == A
    assert (A @ A).to_dense() == [[7, 10], [15, 22]]
    assert A.transpose().to_dense() == [[1, 3], [2, 4]]


def test_solve_inconsistent():
    rows = [{0: 1}, {0: 1}]
    assert solve(rows, [1, 2], 1) is None
    assert solve(rows, [1, 1], 1) == {0: 1}


def test_echelon_membership():
    E = Echelon([{0: 1, 1: 1}, {1: 2}])
    assert {0: 5} in E
    assert E.rank == 2
    assert E.add({0: 3, 1: -1}) is None


@given(dense)
def test_rank_nullity(rows):
    A = SparseMatrix.from_dense(rows)
    basis, free = nullspace(A.rows(), A.ncols)
    assert A.rank() + len(basis) == A.ncols
    for v in basis:
        assert not A.apply(v)
    assert rank(A.cols.values()) == A.rank() == A.transpose().rank()


@given(dense, st.data())
def test_solve_finds_solutions(rows, data):
    A = SparseMatrix.from_dense(rows)
    x = {i: data.draw(small) for i in range(A.ncols)}
    b = A.apply(x)
    y = solve(A.rows(), [b.get(i, 0) for i in range(A.nrows)], A.ncols)
    assert y is not None
    assert A.apply(y) == b
