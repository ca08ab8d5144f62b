from fractions import Fraction

import pytest

from liemodels.catalog.ansatz import (A33_EQUATIONS, F33_EQUATIONS, PolySpan, build_ansatz,
                                      equivariance_defect, f33_equation, jacobi_residuals,
                                      recover_a33_equations, residual_system, verify_rigidity,
                                      verify_solution)
from liemodels.poly import MultiPoly, variables
from sympy_oracle import groebner_of


@pytest.fixture(scope="module")
def rigidity():
    return verify_rigidity()


@pytest.mark.parametrize("kind", ["a33", "f33"])
def test_ansatz_is_equivariant(kind):
    assert not equivariance_defect(build_ansatz(kind))


def test_a33_equations_recovered():
    modes = recover_a33_equations()
    assert set(modes) == set(A33_EQUATIONS)
    assert all(modes.values())
    assert modes["E3"] == "earlier"


def test_a33_first_triple():
    A = build_ansatz("a33")
    res = [r for r in jacobi_residuals(A, A.triples["E1"]) if r]
    span = PolySpan(res)
    c1, c5, c8 = variables("c1", "c5", "c8")
    assert span.contains(c1 - c5 - Fraction(5, 6) * c8)


def test_a33_solution():
    rep = verify_solution("a33")
    assert rep.ok and len(rep.samples) == 7


def test_f33_membership(rigidity):
    assert set(rigidity.membership) == set(F33_EQUATIONS)
    assert all(m == "span" for m in rigidity.membership.values())


def test_f33_chain(rigidity):
    c2 = MultiPoly.var("c2")
    assert rigidity.f4_expression == Fraction(72, 49) * c2 ** 3
    assert rigidity.all_zero and rigidity.ok
    assert rigidity.dim == 17 and rigidity.growth == (3, 6, 14)
    assert rigidity.zero_assignment_is_lie


def test_f33_rigidity_matches_groebner_oracle():
    """Independent confirmation over C: the radical of the Jacobi ideal is all coefficients."""
    A = build_ansatz("f33")
    G = groebner_of(residual_system(A), A.unknowns, order="grevlex")
    import sympy
    for name in A.unknowns:
        v = sympy.Symbol(name)
        assert any(G.reduce(v ** e)[1] == 0 for e in (1, 2, 3)), name


def test_equation_one_reads_as_stated():
    b1, b5, b6 = variables("b1", "b5", "b6")
    assert f33_equation("Eq1") == b1 - b6 - Fraction(5, 6) * b5
