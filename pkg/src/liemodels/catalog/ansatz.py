"""Symbolic bracket ansatzes for the A33 and F[3,3] isometry algebras.

An ansatz is the most general O(3)-equivariant bracket compatible with the
grading, written with unknown coefficients (polynomial variables).  The
Jacobi identity then becomes a system of polynomial equations in them:

* ``a33``: nine unknowns c1..c9; :func:`verify_solution` checks the solved
  one-parameter family, :data:`A33_EQUATIONS` lists the constraints read
  off particular basis triples.
* ``f33``: eighteen unknowns; :func:`verify_rigidity` replays the
  elimination showing all of them vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .. import blocks as B
from ..equivariance import direct_sum_rep, standard_rep
from ..lie import LieAlgebra, from_bracket, growth_vector, jacobi_defect, jacobi_residual
from ..linalg import Subspace, rref_rows
from ..poly import MultiPoly
from .families import (A33_COEFFS, A33_LABELS, F33_COEFFS, F33_ISO_LABELS, a33_bracket,
                       a33_solution, f33_ansatz_bracket, f33_zero_assignment)

ZERO = Fraction(0)
F = Fraction

BLOCK_SIZES = {"a33": (3, 3, 5, 3), "f33": (3, 3, 5, 3, 3)}
BLOCK_NAMES = {"a33": ("x", "y", "S", "w"), "f33": ("x", "y", "S", "z", "w")}
# O(3) types of the blocks: w is the so(3) factor, an axial vector
BLOCK_REPS = {"a33": ("R3", "R3bar", "sbar", "R3bar"), "f33": ("R3", "R3bar", "sbar", "R3", "R3bar")}


@dataclass
class AnsatzAlgebra:
    kind: str
    algebra: LieAlgebra
    unknowns: tuple
    triples: dict = field(default_factory=dict)   # equation name -> basis triple (block form)

    def specialize(self, assignment: dict, name: str | None = None) -> LieAlgebra:
        bracket = a33_bracket if self.kind == "a33" else f33_ansatz_bracket
        labels = self.algebra.labels
        return from_bracket(name or f"{self.kind}_ansatz", labels, bracket(assignment))


def _vars(names) -> dict:
    return {n: MultiPoly.var(n) for n in names}


def block_vector(kind: str, **blocks) -> tuple:
    """Flat coordinates from named blocks, e.g. ``block_vector("a33", x=e1)``."""
    parts = []
    for name, size in zip(BLOCK_NAMES[kind], BLOCK_SIZES[kind]):
        parts.append(tuple(F(c) for c in blocks.get(name, (0,) * size)))
    return B.join(*parts)


def _e(i, n=3):
    return B.unit(i, n)


def _s(label: str):
    return _e(B.S_LABELS.index(label), 5)


# Equation name -> (triple, lhs - rhs).  Triples use the (x, y, S, w) blocks.
def _a33_equations() -> dict:
    c = _vars(A33_COEFFS)
    c1, c2, c3, c4, c5, c6, c7, c8, c9 = (c[n] for n in A33_COEFFS)
    x1, x2 = block_vector("a33", x=_e(0)), block_vector("a33", x=_e(1))
    y1, y2 = block_vector("a33", y=_e(0)), block_vector("a33", y=_e(1))
    s12, s13 = block_vector("a33", S=_s("S12")), block_vector("a33", S=_s("S13"))
    return {
        "E1": ((x1, x2, y1), F(5, 6) * c9 - c2),
        "E2": ((x1, x2, y1), c5 + F(5, 6) * c8 - c1),
        "E3": ((y1, y2, x1), 3 * c7 - 2 * c1 + F(5, 6) * c8),
        "E4": ((x1, y1, s12), c3 - (c1 * c8 + c9 - c6 - c7 * c8)),
        "E5": ((x1, y1, s12), c4 - (c2 * c8 - c7 * c9)),
        "E6": ((x1, x2, s13), c6 + c5 * c8 + c9),
        "E7": ((x1, x2, s13), c7 + F(1, 2) * c8),
        "E8": ((y1, y2, s13), c2 - (c7 * c7 - c1 * c7 + F(1, 2) * c6)),
    }


def _f33_equations() -> dict:
    v = _vars(F33_COEFFS)
    a1, a2, b1, b2, b3, b4, b5, b6 = (v[n] for n in ("a1", "a2", "b1", "b2", "b3", "b4", "b5", "b6"))
    c1, c2, d1, d2 = v["c1"], v["c2"], v["d1"], v["d2"]
    f1, f2, f3, f4, f5, f6 = (v[n] for n in ("f1", "f2", "f3", "f4", "f5", "f6"))
    half = F(1, 2)
    return {
        "Eq1": b1 - b6 - F(5, 6) * b5,
        "Eq2": f1 - f6 - F(5, 6) * f5,
        "Eq3": b1 - 3 * c1 - c2,
        "Eq4": f2 + d1 * b4 + d2 * b2,
        "Eq5": f4 - half * c2 * b2 + c1 * b4,
        "Eq6": f4 + b5 * a2,
        "Eq7": b4 - c2 * b5,
        "Eq8": f5 + d2 * b5 + b4,
        "Eq9": f5 + a1,
        "Eq10": b5 + 2 * c1,
        "Eq11": b5 + d1,
        "Eq12": b2 + 6 * (f5 + c1 * b5),
        "Eq13": f6 - a2,
        "Eq14": b6 + c2,
        "Eq15": b6 - d2,
        "Eq16": f3 - a2 * b6,
        "Eq17": b3 + c2 * b6,
        "Eq18": f6 - b3 + d2 * b6,
    }


def build_ansatz(kind: str) -> AnsatzAlgebra:
    if kind == "a33":
        names, labels, bracket = A33_COEFFS, A33_LABELS, a33_bracket
        triples = {k: t for k, (t, _) in _a33_equations().items()}
    elif kind == "f33":
        names, labels, bracket = F33_COEFFS, F33_ISO_LABELS, f33_ansatz_bracket
        triples = {}
    else:
        raise ValueError(f"unknown ansatz {kind!r}; use a33 or f33")
    g = from_bracket(f"{kind}_ansatz", labels, bracket(_vars(names)), ring="polynomial",
                     flags=("ansatz",))
    return AnsatzAlgebra(kind, g, tuple(names), triples)


def _flatten_triple(A: AnsatzAlgebra, triple) -> tuple:
    out = []
    n = len(BLOCK_SIZES[A.kind])
    for t in triple:
        if len(t) == n and not isinstance(t[0], (int, Fraction)):
            out.append(B.join(*t))
        else:
            out.append(tuple(t))
    return tuple(out)


def jacobi_residuals(A: AnsatzAlgebra, triple: Sequence) -> tuple:
    """Polynomial Jacobi defect at a triple of vectors (flat or given block-wise)."""
    u, v, w = _flatten_triple(A, triple)
    return tuple(MultiPoly._coerce(c) for c in jacobi_residual(A.algebra, u, v, w))


# --- span membership over monomials --------------------------------------

class PolySpan:
    """Linear span of polynomials, tested for membership by row reduction over monomials."""

    def __init__(self, polys: Sequence[MultiPoly]):
        self.polys = [p for p in polys if p]
        monos = sorted({m for p in self.polys for m in p.terms}, key=lambda m: (len(m), m))
        self.index = {m: i for i, m in enumerate(monos)}
        self.rows, self.pivots = rref_rows([self._row(p) for p in self.polys], len(monos))

    def _row(self, p: MultiPoly, n: int | None = None) -> list:
        row = [ZERO] * (len(self.index) if n is None else n)
        for m, c in p.terms.items():
            row[self.index[m]] = c
        return row

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains(self, p: MultiPoly) -> bool:
        p = MultiPoly._coerce(p)
        if any(m not in self.index for m in p.terms):
            return False
        v = self._row(p)
        for row, piv in zip(self.rows, self.pivots):
            if v[piv]:
                c = v[piv]
                v = [a - c * b for a, b in zip(v, row)]
        return not any(v)


def _components(polys) -> list:
    return [MultiPoly._coerce(p) for p in polys if p]


def recover_equation(eq: MultiPoly, residuals: Sequence, earlier: Sequence = (),
                     variables: Sequence[str] = ()) -> str | None:
    """How ``eq`` follows from residual polynomials.

    ``"span"``: a linear combination of the residuals; ``"earlier"``: also
    using previously established equations; ``"earlier*var"``: also their
    multiples by single variables.  ``None`` if none of these works.
    """
    res = _components(residuals)
    if PolySpan(res).contains(eq):
        return "span"
    if earlier:
        if PolySpan(res + list(earlier)).contains(eq):
            return "earlier"
        mult = [MultiPoly.var(v) * e for e in earlier for v in variables]
        if PolySpan(res + list(earlier) + mult).contains(eq):
            return "earlier*var"
    return None


A33_EQUATIONS = tuple(f"E{i}" for i in range(1, 9))
F33_EQUATIONS = tuple(f"Eq{i}" for i in range(1, 19))


def a33_equation(name: str) -> MultiPoly:
    return _a33_equations()[name][1]


def f33_equation(name: str) -> MultiPoly:
    return _f33_equations()[name]


def recover_a33_equations(A: AnsatzAlgebra | None = None) -> dict:
    """E-equation -> recovery mode from the residuals at its stated triple."""
    A = A or build_ansatz("a33")
    eqs = _a33_equations()
    out, earlier = {}, []
    for name in A33_EQUATIONS:
        triple, eq = eqs[name]
        out[name] = recover_equation(eq, jacobi_residuals(A, triple), earlier, A33_COEFFS)
        earlier.append(eq)
    return out


def residual_system(A: AnsatzAlgebra) -> list:
    """All nonzero Jacobi residual components over basis triples i < j < k."""
    report = jacobi_defect(A.algebra)
    return [MultiPoly._coerce(c) for vec in report.residuals.values() for c in vec if c]


# --- equivariance certificate ------------------------------------------

def ansatz_rep(kind: str):
    return direct_sum_rep(*(standard_rep(r) for r in BLOCK_REPS[kind]), name=kind)


def _apply(M, v):
    return tuple(sum((M[i, j] * v[j] for j in range(len(v)) if M[i, j] and v[j]), ZERO)
                 for i in range(M.rows))


def equivariance_defect(A: AnsatzAlgebra):
    """First basis pair where the O(3) action fails to be compatible with the bracket, or None.

    The so(3) generators must act by derivations and the reflection by an
    automorphism; the bracket coefficients stay symbolic throughout.
    """
    g = A.algebra
    rep = ansatz_rep(A.kind)
    n = g.dim
    units = [g.unit(i) for i in range(n)]
    for G in rep.gens:
        for i in range(n):
            for j in range(i + 1, n):
                lhs = _apply(G, g.basis_bracket(i, j))
                rhs = B.add(g.bracket(_apply(G, units[i]), units[j]),
                            g.bracket(units[i], _apply(G, units[j])))
                if any(a - b for a, b in zip(lhs, rhs)):
                    return ("derivation", i, j)
    R = rep.reflection
    for i in range(n):
        for j in range(i + 1, n):
            lhs = _apply(R, g.basis_bracket(i, j))
            rhs = g.bracket(_apply(R, units[i]), _apply(R, units[j]))
            if any(a - b for a, b in zip(lhs, rhs)):
                return ("reflection", i, j)
    return None


# --- solutions -----------------------------------------------------------

KAPPA_SAMPLES = (F(0), F(1), F(-1), F(2), F(-2), F(3), F(4))


@dataclass
class SolutionReport:
    kind: str
    samples: dict              # sample -> Jacobi defect is zero
    symbolic: bool             # identically zero with the parameter kept symbolic
    degree_bound: int          # max degree of the defect in the parameter

    @property
    def ok(self) -> bool:
        return self.symbolic and all(self.samples.values())


def verify_solution(kind: str = "a33") -> SolutionReport:
    """a33: the solved coefficients give a Lie algebra for every kappa; f33: the zero assignment does."""
    if kind == "f33":
        g = build_ansatz("f33").specialize(f33_zero_assignment(), "f33_zero")
        ok = jacobi_defect(g).is_zero
        return SolutionReport("f33", {"zero": ok}, ok, 0)
    if kind != "a33":
        raise ValueError(f"unknown ansatz {kind!r}")
    kappa = MultiPoly.var("kappa")
    g = from_bracket("a33(kappa)", A33_LABELS, a33_bracket(a33_solution(kappa)), ring="polynomial")
    symbolic = jacobi_defect(g).is_zero
    # structure constants have degree <= 3 in kappa, so the defect has degree <= 6 and
    # vanishing at 7 distinct points forces it to vanish identically
    samples = {}
    for k in KAPPA_SAMPLES:
        h = from_bracket(f"a33({k})", A33_LABELS, a33_bracket(a33_solution(k)))
        samples[k] = jacobi_defect(h).is_zero
    return SolutionReport("a33", samples, symbolic, 6)


# --- the F[3,3] elimination chain --------------------------------------

@dataclass
class RigidityStep:
    statement: str
    equations: tuple
    result: str


@dataclass
class RigidityReport:
    membership: dict                   # Eq name -> recovery mode
    steps: list
    final: dict                        # coefficient -> value
    f4_expression: MultiPoly
    dim: int
    growth: tuple
    zero_assignment_is_lie: bool

    @property
    def all_zero(self) -> bool:
        return all(v == 0 for v in self.final.values()) and len(self.final) == len(F33_COEFFS)

    @property
    def ok(self) -> bool:
        return (self.all_zero and self.zero_assignment_is_lie
                and all(m is not None for m in self.membership.values()))


class _Eliminator:
    """Keeps solved coefficients as polynomials in the remaining free ones."""

    def __init__(self):
        self.known: dict = {}
        self.eqs = _f33_equations()
        self.steps: list = []

    def reduce(self, p: MultiPoly) -> MultiPoly:
        prev = None
        while prev != p:
            prev, p = p, p.substitute(self.known)
        return p

    def _solve_for(self, eq: MultiPoly, var: str) -> MultiPoly:
        """Solve a polynomial that is linear in ``var`` (with constant coefficient)."""
        v = MultiPoly.var(var)
        lin = {m: c for m, c in eq.terms.items() if dict(m).get(var, 0) == 1}
        if any(len(m) != 1 for m in lin) or eq.degree(var) != 1:
            raise ValueError(f"{eq} is not linear in {var} with constant coefficient")
        coef = lin[((var, 1),)]
        return v - eq * F(1, 1) / coef

    def define(self, var: str, eq_name: str, statement: str):
        eq = self.reduce(self.eqs[eq_name])
        value = self.reduce(self._solve_for(eq, var))
        self.known[var] = value
        self.steps.append(RigidityStep(statement, (eq_name,), f"{var} = {value}"))
        return value


def verify_rigidity(check_membership: bool = True) -> RigidityReport:
    """Replay the elimination forcing every F[3,3] ansatz coefficient to zero.

    Each step substitutes previously established relations into one of
    Eq1..Eq18 and records the resulting identity.
    """
    A = build_ansatz("f33")
    membership = {}
    if check_membership:
        span = PolySpan(residual_system(A))
        eqs = _f33_equations()
        for name in F33_EQUATIONS:
            membership[name] = "span" if span.contains(eqs[name]) else None
    E = _Eliminator()
    # linear relations in terms of c1, c2
    E.define("b6", "Eq14", "b6 = -c2")
    E.define("d2", "Eq15", "d2 = b6")
    E.define("b3", "Eq17", "b3 = -c2 b6")
    E.define("b5", "Eq10", "b5 = -2 c1")
    E.define("d1", "Eq11", "d1 = -b5")
    E.define("b4", "Eq7", "b4 = c2 b5")
    f6 = E.define("f6", "Eq18", "f6 = b3 - d2 b6 with b3 = -c2 b6, d2 = b6, b6 = -c2")
    if f6:
        raise AssertionError(f"f6 should vanish, got {f6}")
    E.define("a2", "Eq13", "a2 = f6")
    E.define("f4", "Eq6", "f4 = -b5 a2")
    f5 = E.define("f5", "Eq8", "f5 = -d2 b5 - b4 with d2 = b6, b4 = c2 b5, b6 = -c2")
    if f5:
        raise AssertionError(f"f5 should vanish, got {f5}")
    E.define("a1", "Eq9", "a1 = -f5")
    E.define("b2", "Eq12", "b2 = -6 (f5 + c1 b5)")
    # Eq5 gives f4 a second time; keep f4 = 0 aside to read off the cubic
    f4_zero = E.known.pop("f4")
    f4_eq5 = E.reduce(E._solve_for(E.reduce(E.eqs["Eq5"]), "f4"))
    E.steps.append(RigidityStep("f4 = c2 b2 / 2 - c1 b4 with b2 = -6 c1 b5, b4 = c2 b5, b5 = -2 c1",
                                ("Eq5", "Eq12", "Eq7", "Eq10"), f"f4 = {f4_eq5}"))
    # Eq1 and Eq3 both give b1
    rel = E.reduce(E.eqs["Eq1"] - E.eqs["Eq3"])
    E.steps.append(RigidityStep("b6 + 5/6 b5 = 3 c1 + c2", ("Eq1", "Eq3"), f"{rel} = 0"))
    c1_val = E._solve_for(rel, "c1")
    E.known["c1"] = c1_val
    f4_cubic = E.reduce(f4_eq5)
    E.steps.append(RigidityStep("substitute c1 into f4", ("Eq1", "Eq3", "Eq5"),
                                f"c1 = {c1_val}, f4 = {f4_cubic}"))
    c2 = MultiPoly.var("c2")
    expected = F(72, 49) * c2 ** 3
    if f4_cubic != expected:
        raise AssertionError(f"expected f4 = 72/49 c2^3, got {f4_cubic}")
    # f4 = 0 as well, so c2^3 = 0
    diff = f4_cubic - f4_zero
    E.steps.append(RigidityStep("f4 = 0 from Eq6 and f4 = 72/49 c2^3", ("Eq6", "Eq5"),
                                f"{diff} = 0, hence c2 = 0"))
    E.known["f4"] = MultiPoly.const(0)
    E.known["c2"] = MultiPoly.const(0)
    E.define("b1", "Eq3", "b1 = 3 c1 + c2")
    E.define("f1", "Eq2", "f1 = f6 + 5/6 f5")
    E.define("f2", "Eq4", "f2 = -d1 b4 - d2 b2")
    E.define("f3", "Eq16", "f3 = a2 b6")
    final = {}
    for name in F33_COEFFS:
        val = E.reduce(E.known.get(name, MultiPoly.var(name)))
        final[name] = val.constant_value() if val.is_constant() else val
    # every Eq must hold at the final assignment
    for name, eq in E.eqs.items():
        if eq.substitute({k: v for k, v in final.items()}):
            raise AssertionError(f"{name} fails at the final assignment")
    zero = A.specialize(f33_zero_assignment(), "f33_iso")
    is_lie = jacobi_defect(zero).is_zero
    p = Subspace.coordinate(17, range(3))
    k = Subspace.coordinate(17, range(14, 17))
    return RigidityReport(membership, E.steps, final, f4_cubic, zero.dim,
                          growth_vector(zero, p, k), is_lie)
