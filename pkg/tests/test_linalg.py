from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from liemodels.linalg import (Matrix, Subspace, UnsupportedRingError, determinant, inverse,
                              kernel_of_rows, rank, solve, sym_signature)
from liemodels.poly import MultiPoly
from strategies import matrices, vectors


def sym(M: Matrix):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in M.entries])


@given(matrices(4, 5))
def test_rank_matches_sympy(rows):
    M = Matrix(rows, 5)
    assert rank(M) == sym(M).rank()


@given(matrices(4, 4))
def test_determinant_and_inverse(rows):
    M = Matrix(rows, 4)
    d = determinant(M)
    assert sympy.Rational(d.numerator, d.denominator) == sym(M).det()
    if d:
        assert inverse(M) @ M == Matrix.identity(4)


@given(matrices(3, 6))
def test_kernel(rows):
    ker = kernel_of_rows(rows, 6)
    assert len(ker) == 6 - sym(Matrix(rows, 6)).rank()
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices(3, 3), vectors(3))
def test_solve(rows, b):
    M = Matrix(rows, 3)
    x = solve(M, b)
    if x is not None:
        assert M.apply(x) == tuple(b)
    else:
        assert rank(M) < 3


@given(matrices(2, 5), matrices(2, 5))
def test_subspace_dimension_formula(u, v):
    U, V = Subspace(5, u), Subspace(5, v)
    assert (U + V).dim + (U & V).dim == U.dim + V.dim
    assert (U & V).is_subspace_of(U) and U.is_subspace_of(U + V)


def test_coordinate_subspace():
    W = Subspace.coordinate(5, [1, 3])
    assert W.index_list() == [1, 3]
    assert W.contains((0, 2, 0, -1, 0)) and not W.contains((1, 0, 0, 0, 0))
    assert Subspace(5, [(0, 1, 0, 1, 0)]).index_list() is None


def test_signature():
    S = Matrix([[1, 2, 0], [2, 1, 0], [0, 0, 0]], 3)
    assert sym_signature(S) == (1, 1, 1)


def test_rank_rejects_polynomial_entries():
    M = Matrix([[MultiPoly.var("t"), 1], [1, 1]], 2)
    with pytest.raises(UnsupportedRingError):
        rank(M)


def test_exactness_no_float_drift():
    M = Matrix([[Fraction(1, 3), 1], [1, 3]], 2)
    assert determinant(M) == 0
