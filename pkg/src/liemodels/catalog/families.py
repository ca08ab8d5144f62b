"""The isometry algebras of the model-space families C33(a1, a2), A33(kappa) and F[3,3].

Coordinates follow the block decompositions used throughout:

* c33: (x, y, z, w), each in R^3; p = x-block, k = w-block.
* a33: (x, y, S, w) with S in s; p = x-block, k = w-block.
* f33: (x, y, S, z, w); p = x-block, k = w-block.

The a33 and f33 brackets are written for an arbitrary coefficient
assignment so the same code serves the concrete algebras and the
polynomial ansatz.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .. import blocks as B
from ..lie import LieAlgebra, from_bracket
from ..linalg import Subspace
from ..model import ModelAlgebra
from ..poly import MultiPoly

ZERO = Fraction(0)

C33_LABELS = tuple(f"{b}{i}" for b in "xyzw" for i in (1, 2, 3))
A33_LABELS = ("x1", "x2", "x3", "y1", "y2", "y3") + B.S_LABELS + ("w1", "w2", "w3")
F33_ISO_LABELS = (("x1", "x2", "x3", "y1", "y2", "y3") + B.S_LABELS
                  + ("z1", "z2", "z3", "w1", "w2", "w3"))

A33_COEFFS = tuple(f"c{i}" for i in range(1, 10))
F33_COEFFS = ("a1", "a2", "b1", "b2", "b3", "b4", "b5", "b6", "c1", "c2",
              "d1", "d2", "f1", "f2", "f3", "f4", "f5", "f6")


def _scalar(x):
    return x if isinstance(x, MultiPoly) else Fraction(x)


# --- C33 -----------------------------------------------------------------

def c33_bracket(a1, a2):
    a1, a2 = _scalar(a1), _scalar(a2)
    X = B.cross

    def bracket(u, v):
        x1, y1, z1, w1 = B.split(u, (3, 3, 3, 3))
        x2, y2, z2, w2 = B.split(v, (3, 3, 3, 3))
        xz = B.add(X(x1, z2), X(z1, x2))
        yz = B.add(X(y1, z2), X(z1, y2))
        zz = X(z1, z2)
        mixed = B.add(xz, X(y1, y2), B.scale(a1, zz))
        xr = B.add(X(w1, x2), X(x1, w2), B.scale(a2, yz))
        yr = B.add(X(w1, y2), X(y1, w2), X(x1, x2), B.scale(a1, mixed), B.scale(a2, zz))
        zr = B.add(X(w1, z2), X(z1, w2), X(y1, x2), X(x1, y2), B.scale(a1, yz))
        wr = B.add(X(w1, w2), B.scale(a2, mixed))
        return B.join(xr, yr, zr, wr)

    return bracket


def c33_algebra(a1, a2) -> LieAlgebra:
    return from_bracket(f"c33({a1},{a2})", C33_LABELS, c33_bracket(a1, a2),
                        {"a1": _scalar(a1), "a2": _scalar(a2)})


def c33_iso(a1, a2) -> ModelAlgebra:
    g = c33_algebra(a1, a2)
    return ModelAlgebra(g, Subspace.coordinate(12, range(3)), Subspace.coordinate(12, range(9, 12)),
                        "c33", dict(g.params))


def p_c(c) -> Subspace:
    """p_c = {(x, 0, 0, c x)} in c33 coordinates."""
    c = Fraction(c)
    vecs = []
    for i in range(3):
        v = [ZERO] * 12
        v[i] = Fraction(1)
        v[9 + i] = c
        vecs.append(v)
    return Subspace(12, vecs)


# --- A33 -----------------------------------------------------------------

def a33_solution(kappa) -> dict:
    """Solved coefficients of the A33 bracket (the [y, S] coefficient is 3 kappa)."""
    k = _scalar(kappa)
    return {"c1": 2 * k, "c2": 15 * k * k, "c3": 0 * k, "c4": -144 * k * k * k,
            "c5": 7 * k, "c6": 24 * k * k, "c7": 3 * k, "c8": -6 * k, "c9": 18 * k * k}


def a33_bracket(c: Mapping):
    c1, c2, c3, c4, c5, c6, c7, c8, c9 = (c[n] for n in A33_COEFFS)
    X = B.cross
    sizes = (3, 3, 5, 3)

    def bracket(u, v):
        x1, y1, S1, w1 = B.split(u, sizes)
        x2, y2, S2, w2 = B.split(v, sizes)
        sx = B.sub(B.s_apply(S2, x1), B.s_apply(S1, x2))       # S2 x1 - S1 x2
        sy = B.sub(B.s_apply(S2, y1), B.s_apply(S1, y2))       # S2 y1 - S1 y2
        ss = B.star_bracket(S1, S2)
        xr = B.add(B.scale(c5, B.add(X(x1, y2), X(y1, x2))), B.scale(c6, sy),
                   X(x1, w2), X(w1, x2))
        yr = B.add(X(x1, x2), B.scale(c1, X(y1, y2)), B.scale(c3, ss), B.scale(c8, sx),
                   X(y1, w2), X(w1, y2))
        Sr = B.add(B.sub(B.odot(x1, y2), B.odot(y1, x2)),
                   B.scale(c7, B.sub(B.rot_s(y1, S2), B.rot_s(y2, S1))),
                   B.sub(B.s_rot(S1, w2), B.s_rot(S2, w1)))
        wr = B.add(B.scale(c2, X(y1, y2)), B.scale(c4, ss), B.scale(c9, sx), X(w1, w2))
        return B.join(xr, yr, Sr, wr)

    return bracket


def a33_algebra(kappa) -> LieAlgebra:
    k = _scalar(kappa)
    return from_bracket(f"a33({kappa})", A33_LABELS, a33_bracket(a33_solution(k)), {"kappa": k})


def a33_iso(kappa) -> ModelAlgebra:
    g = a33_algebra(kappa)
    return ModelAlgebra(g, Subspace.coordinate(14, range(3)), Subspace.coordinate(14, range(11, 14)),
                        "a33", dict(g.params))


# --- F33 -----------------------------------------------------------------

def f33_ansatz_bracket(c: Mapping):
    (a1, a2, b1, b2, b3, b4, b5, b6, c1, c2,
     d1, d2, f1, f2, f3, f4, f5, f6) = (c[n] for n in F33_COEFFS)
    X = B.cross
    sizes = (3, 3, 5, 3, 3)

    def half(u, v):
        # the terms that appear as T(1,2) - T(2,1)
        x1, y1, S1, z1, w1 = B.split(u, sizes)
        x2, y2, S2, z2, w2 = B.split(v, sizes)
        xr = B.add(B.scale(a1, B.s_apply(S2, y1)), B.scale(a2, X(y1, z2)), X(x1, w2))
        yr = B.add(B.scale(b4, B.s_apply(S1, z2)), B.scale(b5, B.s_apply(S2, x1)),
                   B.scale(b6, X(x1, z2)), X(y1, w2))
        Sr = B.add(B.odot(x1, y2), B.scale(c1, B.rot_s(y1, S2)), B.scale(c2, B.odot(y1, z2)),
                   B.s_rot(S1, w2))
        zr = B.add(X(x1, y2), B.scale(d1, B.s_apply(S2, y1)), B.scale(d2, X(y1, z2)), X(z1, w2))
        wr = B.add(B.scale(f4, B.s_apply(S1, z2)), B.scale(f5, B.s_apply(S2, x1)),
                   B.scale(f6, X(x1, z2)))
        return B.join(xr, yr, Sr, zr, wr)

    def bracket(u, v):
        x1, y1, S1, z1, w1 = B.split(u, sizes)
        x2, y2, S2, z2, w2 = B.split(v, sizes)
        ss = B.star_bracket(S1, S2)
        sym = B.join(B.zeros(3),
                     B.add(X(x1, x2), B.scale(b1, X(y1, y2)), B.scale(b2, ss), B.scale(b3, X(z1, z2))),
                     B.zeros(5), B.zeros(3),
                     B.add(B.scale(f1, X(y1, y2)), B.scale(f2, ss), B.scale(f3, X(z1, z2)), X(w1, w2)))
        return B.add(sym, B.sub(half(u, v), half(v, u)))

    return bracket


def f33_zero_assignment() -> dict:
    return {n: ZERO for n in F33_COEFFS}


def f33_iso() -> ModelAlgebra:
    """f[3,3] extended by so(3) acting by the natural derivations (all ansatz constants zero)."""
    g = from_bracket("f33_iso", F33_ISO_LABELS, f33_ansatz_bracket(f33_zero_assignment()))
    return ModelAlgebra(g, Subspace.coordinate(17, range(3)), Subspace.coordinate(17, range(14, 17)),
                        "f33")


def build_iso_algebra(family: str, **params) -> ModelAlgebra:
    if family == "c33":
        return c33_iso(Fraction(params.get("a1", 0)), Fraction(params.get("a2", 0)))
    if family == "a33":
        return a33_iso(Fraction(params.get("kappa", 0)))
    if family == "f33":
        return f33_iso()
    raise ValueError(f"unknown family {family!r}; use c33, a33 or f33")
