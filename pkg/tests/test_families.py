from fractions import Fraction

import pytest
import sympy

from liemodels.catalog.ansatz import build_ansatz, residual_system
from liemodels.catalog.families import (a33_algebra, a33_bracket, a33_iso, a33_solution, c33_algebra,
                                        c33_iso, f33_iso, p_c)
from liemodels.free import carnot_quotients
from liemodels.lie import associated_graded, from_bracket, jacobi_defect, killing_signature
from sympy_oracle import groebner_of

A1 = [Fraction(-5), Fraction(0), Fraction(3), Fraction(5), Fraction(1, 2)]
A2 = [Fraction(-4), Fraction(0), Fraction(4), Fraction(-1), Fraction(1, 3)]


@pytest.mark.parametrize("a1", A1)
@pytest.mark.parametrize("a2", A2)
def test_c33_grid(a1, a2):
    m = c33_iso(a1, a2)
    assert jacobi_defect(m.algebra).is_zero
    assert m.check_invariants() == []
    assert m.growth() == (3, 6, 9)


@pytest.mark.parametrize("a1, a2", [(5, -4), (3, 4), (0, 0), (-2, -1)])
def test_c33_nilpotentization(a1, a2):
    m = c33_iso(a1, a2)
    gr = associated_graded(m.algebra, m.p, m.k, expected=carnot_quotients()["c33_carnot"].algebra)
    assert gr.comparison["equal"], gr.comparison


KAPPAS = [0, 1, -1, 2, -2, Fraction(1, 3), Fraction(-5, 2)]


@pytest.mark.parametrize("kappa", KAPPAS)
def test_a33_samples(kappa):
    m = a33_iso(kappa)
    assert jacobi_defect(m.algebra).is_zero
    assert m.growth() == (3, 6, 11)


@pytest.mark.parametrize("kappa", [1, -1, 3])
def test_a33_nilpotentization(kappa):
    m = a33_iso(kappa)
    gr = associated_graded(m.algebra, m.p, m.k, expected=carnot_quotients()["a33_carnot"].algebra)
    assert gr.comparison["equal"], gr.comparison


def test_a33_with_c7_seven_kappa_fails():
    sol = a33_solution(Fraction(1))
    sol["c7"] = Fraction(7)
    g = from_bracket("a33_bad", a33_algebra(1).labels, a33_bracket(sol))
    assert not jacobi_defect(g).is_zero


def test_a33_solution_matches_groebner_oracle():
    """Solve the c1..c9 Jacobi system from scratch with sympy and compare."""
    A = build_ansatz("a33")
    G = groebner_of(residual_system(A), A.unknowns)
    k = sympy.Symbol("kappa")
    c = sympy.symbols("c1:10")
    # parametrize the oracle's variety by c8 = -6 kappa and compare symbolically
    sol = sympy.solve(G.exprs, c[:7] + c[8:], dict=True)
    assert len(sol) == 1
    expr = {ci: sympy.expand(sol[0][ci].subs(c[7], -6 * k)) for ci in c if ci != c[7]}
    expr[c[7]] = -6 * k
    want = {c[0]: 2 * k, c[1]: 15 * k ** 2, c[2]: 0, c[3]: -144 * k ** 3, c[4]: 7 * k,
            c[5]: 24 * k ** 2, c[6]: 3 * k, c[7]: -6 * k, c[8]: 18 * k ** 2}
    assert expr == want


def test_f33_iso():
    m = f33_iso()
    assert m.dim == 17 and jacobi_defect(m.algebra).is_zero
    assert m.growth() == (3, 6, 14)
    gr = associated_graded(m.algebra, m.p, m.k, expected=carnot_quotients()["f33"].algebra)
    assert gr.comparison["equal"]


def test_c33_killing_distinguishes_regimes():
    assert killing_signature(c33_algebra(3, 4)) == (3, 9, 0)
    assert killing_signature(c33_algebra(5, -4)) == (0, 12, 0)


def test_p_c_is_graph():
    W = p_c(Fraction(2))
    assert W.dim == 3 and W.contains((1, 0, 0) + (0,) * 6 + (2, 0, 0))
