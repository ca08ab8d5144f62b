"""Independent checks through sympy, used only by the tests."""

import sympy


def to_sympy(p):
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for name, e in mono:
            term *= sympy.Symbol(name) ** e
        out += term
    return sympy.expand(out)


def groebner_of(polys, unknowns, order="lex"):
    eqs = sorted({to_sympy(p) for p in polys}, key=sympy.default_sort_key)
    return sympy.groebner(eqs, *sympy.symbols(" ".join(unknowns)), order=order)
