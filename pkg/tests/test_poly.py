from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from liemodels.poly import MultiPoly, variables
from strategies import small_rationals

x, y, z = variables("x", "y", "z")
SX, SY, SZ = sympy.symbols("x y z")


def to_sympy(p: MultiPoly):
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for name, e in mono:
            term *= sympy.Symbol(name) ** e
        out += term
    return sympy.expand(out)


polys = st.lists(st.tuples(small_rationals, st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)),
                 max_size=4).map(lambda ts: sum((c * x ** a * y ** b * z ** d for c, a, b, d in ts),
                                                MultiPoly.const(0)))


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@given(polys, small_rationals, small_rationals)
def test_substitution_matches_sympy(p, a, b):
    got = p.substitute({"x": a, "y": b})
    want = to_sympy(p).subs({SX: sympy.Rational(a.numerator, a.denominator),
                             SY: sympy.Rational(b.numerator, b.denominator)})
    assert to_sympy(got) == sympy.expand(want)


def test_basic_queries():
    p = 3 * x ** 2 * y - y + Fraction(1, 2)
    assert p.total_degree() == 3
    assert p.degree("x") == 2
    assert set(p.variables) == {"x", "y"}
    assert not p.is_constant()
    assert (p - p).is_constant() and not (p - p)
    assert MultiPoly.const(5).constant_value() == 5


def test_partial_substitution_by_polynomial():
    p = x * y + z
    assert p.substitute({"x": y + 1}) == y * y + y + z
