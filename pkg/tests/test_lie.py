from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from liemodels.catalog.classical import so3
from liemodels.catalog.families import c33_algebra
from liemodels.catalog.isomorphisms import so3_complex
from liemodels.lie import (LieAlgebra, LinearMap, NotAnIdealError, NotARepresentationError,
                           OverlapError, associated_graded, center, check_map, direct_sum,
                           generated_subalgebra, growth_vector, ideal_closure, is_ideal,
                           jacobi_defect, jacobi_residual, killing_signature, quotient, realify,
                           semidirect, series_dims)
from liemodels.linalg import Matrix, Subspace
from liemodels import blocks as B
from strategies import small_int, vectors


def heisenberg():
    return LieAlgebra("heis", ["X", "Y", "Z"], {(0, 1): {2: Fraction(1)}})


def test_so3_basics():
    g = so3()
    assert g.dim == 3 and jacobi_defect(g).is_zero
    assert killing_signature(g) == (0, 3, 0)
    assert g.basis_bracket(0, 1) == (0, 0, 1)
    assert g.basis_bracket(1, 0) == (0, 0, -1)


def test_heisenberg():
    h = heisenberg()
    assert jacobi_defect(h).is_zero
    assert growth_vector(h, Subspace.coordinate(3, [0, 1])) == (2, 3)
    assert series_dims(h, "lower_central") == [3, 1, 0]
    assert center(h) == Subspace.coordinate(3, [2])
    assert killing_signature(h) == (0, 0, 3)


def test_jacobi_failure_names_triple():
    bad = LieAlgebra("bad", ["a", "b", "c"], {(0, 1): {2: Fraction(1)}, (1, 2): {0: Fraction(1)},
                                              (0, 2): {0: Fraction(1)}})
    rep = jacobi_defect(bad)
    assert not rep.is_zero
    assert rep.first == (0, 1, 2)


def _sympy_jacobi_zero(n, table):
    """Independent oracle: sum of cyclic [[e_i,e_j],e_k] via sympy arrays."""
    C = sympy.MutableDenseNDimArray.zeros(n, n, n)
    for (i, j), terms in table.items():
        for k, c in terms.items():
            C[i, j, k] = c
            C[j, i, k] = -c
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = sum(C[i, j, l] * C[l, k, m] + C[j, k, l] * C[l, i, m] + C[k, i, l] * C[l, j, m]
                            for l in range(n))
                    if s != 0:
                        return False
    return True


@given(st.lists(small_int, min_size=9, max_size=9))
def test_jacobi_matches_sympy_oracle(cs):
    table = {}
    it = iter(cs)
    for pair in ((0, 1), (0, 2), (1, 2)):
        terms = {k: Fraction(next(it)) for k in range(3)}
        terms = {k: c for k, c in terms.items() if c}
        if terms:
            table[pair] = terms
    g = LieAlgebra("random", ["a", "b", "c"], table)
    assert jacobi_defect(g).is_zero == _sympy_jacobi_zero(3, table)


@given(vectors(12), vectors(12), vectors(12))
def test_bracket_identities_on_c33(u, v, w):
    g = c33_algebra(5, -4)
    assert g.bracket(u, v) == B.neg(g.bracket(v, u))
    assert not any(jacobi_residual(g, u, v, w))


def test_check_map():
    h = heisenberg()
    ident = LinearMap(h, h, Matrix.identity(3), "id")
    assert check_map(ident, "isomorphism")
    skew = LinearMap.from_images(h, h, [(1, 0, 0), (0, 1, 0), (0, 0, 2)], "skew")
    res = check_map(skew)
    assert not res and res.counterexample == (0, 1)
    collapse = LinearMap.from_images(h, h, [(1, 0, 0), (0, 0, 0), (0, 0, 0)])
    assert check_map(collapse) and not check_map(collapse, "isomorphism")


def test_euclidean_semidirect():
    k = so3()
    theta = [Matrix(B.hat(e), 3) for e in B.E]
    e3 = semidirect(k, 3, theta, "e(3)")
    assert e3.dim == 6 and jacobi_defect(e3).is_zero
    assert is_ideal(e3, Subspace.coordinate(6, range(3, 6)))
    with pytest.raises(NotARepresentationError):
        semidirect(k, 3, [Matrix(B.hat(e), 3) * 2 for e in B.E])


def test_quotient_and_ideals():
    h = heisenberg()
    q, proj = quotient(h, Subspace.coordinate(3, [2]))
    assert q.dim == 2 and not q.brackets
    assert proj((1, 2, 3)) == (1, 2)
    with pytest.raises(NotAnIdealError):
        quotient(h, Subspace.coordinate(3, [0]))
    assert ideal_closure(h, Subspace.coordinate(3, [0])).dim == 2


def test_direct_sum_and_generated():
    g = direct_sum(so3(), so3())
    assert g.dim == 6 and jacobi_defect(g).is_zero
    assert killing_signature(g) == (0, 6, 0)
    assert generated_subalgebra(g, Subspace(6, [(1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0)])).dim == 3


def test_realify_so3c_is_lorentz_signature():
    r = realify(so3_complex())
    assert r.dim == 6 and r.ring == "rational" and jacobi_defect(r).is_zero
    assert killing_signature(r) == (3, 3, 0)


def test_growth_rejects_overlap():
    g = so3()
    with pytest.raises(OverlapError):
        growth_vector(g, Subspace.coordinate(3, [0, 1]), Subspace.coordinate(3, [1]))


def test_associated_graded_of_so3_is_heisenberg():
    gr = associated_graded(so3(), Subspace.coordinate(3, [0, 1]), expected=heisenberg())
    assert gr.layer_dims == (2, 1) and gr.is_graded()
    assert gr.comparison["equal"]
