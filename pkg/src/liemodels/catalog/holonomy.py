"""Holonomy triviality for the connections on C33(a1, a2).

The connection attached to c has trivial holonomy exactly when the
subalgebra generated by p_c = {(x, 0, 0, c x)} meets the isotropy k
trivially.  Algebraically the admissible c satisfy c^2 = t with
t^2 - a1 t - a2 = 0; this module reports those roots and certifies each
rational candidate by a direct closure computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..lie import generated_subalgebra
from ..scalars import UnsupportedParameterError, rational_sqrt
from .families import c33_iso, p_c


@dataclass(frozen=True)
class Certificate:
    c: Fraction
    closure_dim: int
    meet_dim: int          # dim(closure(p_c) & k)

    @property
    def trivial(self) -> bool:
        return self.meet_dim == 0


@dataclass
class HolonomyReport:
    a1: Fraction
    a2: Fraction
    discriminant: Fraction
    roots: list            # rational roots t of t^2 - a1 t - a2, sorted; empty if none rational
    irrational: bool       # real roots exist but are irrational
    root_status: dict      # t -> "accepted" (t >= 0) or "rejected" (t < 0)
    trivial_c: list        # rational c with c^2 an accepted root, sorted
    certificates: dict = field(default_factory=dict)   # c -> Certificate

    @property
    def real_c_exists(self) -> bool:
        return self.discriminant >= 0 and (self.irrational or any(
            s == "accepted" for s in self.root_status.values()))


def certify(model, c) -> Certificate:
    c = Fraction(c)
    closure = generated_subalgebra(model.algebra, p_c(c))
    return Certificate(c, closure.dim, (closure & model.k).dim)


def quadratic_roots(a1, a2) -> tuple:
    """(discriminant, rational roots, irrational flag) of t^2 - a1 t - a2."""
    a1, a2 = Fraction(a1), Fraction(a2)
    D = a1 * a1 + 4 * a2
    if D < 0:
        return D, [], False
    try:
        r = rational_sqrt(D, "sqrt(a1^2 + 4 a2)")
    except UnsupportedParameterError:
        return D, [], True
    return D, sorted({(a1 + r) / 2, (a1 - r) / 2}), False


def holonomy_analysis(a1, a2) -> HolonomyReport:
    a1, a2 = Fraction(a1), Fraction(a2)
    D, roots, irrational = quadratic_roots(a1, a2)
    status = {t: ("accepted" if t >= 0 else "rejected") for t in roots}
    cs = set()
    for t, s in status.items():
        if s != "accepted":
            continue
        try:
            c = rational_sqrt(t, "c")
        except UnsupportedParameterError:
            continue
        cs.update({c, -c})
    model = c33_iso(a1, a2)
    certs = {c: certify(model, c) for c in sorted(cs)}
    return HolonomyReport(a1, a2, D, roots, irrational, status, sorted(cs), certs)


def rational_grid(bound: int = 3, max_den: int = 3) -> list:
    """All rationals p/q with |p/q| <= bound and 1 <= q <= max_den, sorted."""
    out = {Fraction(p, q) for q in range(1, max_den + 1)
           for p in range(-bound * q, bound * q + 1)}
    return sorted(out)


def grid_certificates(a1, a2, bound: int = 3, max_den: int = 3) -> dict:
    """c -> Certificate for every c on the rational grid."""
    model = c33_iso(a1, a2)
    return {c: certify(model, c) for c in rational_grid(bound, max_den)}


def predicted_trivial(a1, a2, c) -> bool:
    c, a1, a2 = Fraction(c), Fraction(a1), Fraction(a2)
    return c ** 4 - a1 * c ** 2 - a2 == 0
