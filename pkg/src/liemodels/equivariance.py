"""O(3) representations on R^3, s and their determinant twists; equivariant bilinear maps.

A representation is stored infinitesimally (the action of ``hat(e_1)``,
``hat(e_2)``, ``hat(e_3)``) together with the matrix of the reflection
``r = diag(1, 1, -1)``.  Since SO(3) is connected and O(3) is generated by
SO(3) and r, these data pin down the O(3) action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import blocks as B
from .free import F33_SIZES, f33_bracket, f33_model
from .lie import ideal_closure
from .linalg import Matrix, Subspace, determinant, inverse, kernel_of_rows
from .poly import MultiPoly

ZERO = Fraction(0)
REFLECTION = (B.vec(1, 0, 0), B.vec(0, 1, 0), B.vec(0, 0, -1))


def _vector_action(A) -> Matrix:
    return Matrix(A, 3)


def _s_conj(q) -> Matrix:
    qinv = inverse(Matrix(q, 3)).entries
    cols = [B.s_coords(B.mat_mul(B.mat_mul(q, S), qinv)) for S in B.S_BASIS]
    return Matrix.from_columns(cols, 5)


def _s_ad(A) -> Matrix:
    cols = [B.s_coords(B.commutator(A, S)) for S in B.S_BASIS]
    return Matrix.from_columns(cols, 5)


@dataclass(frozen=True)
class Rep:
    name: str
    dim: int
    gens: tuple            # action of hat(e1), hat(e2), hat(e3)
    reflection: Matrix     # action of diag(1,1,-1), twist included
    parity: int            # -1 for the determinant-twisted (bar) version
    kind: str              # "vector" or "s"

    def group_matrix(self, q) -> Matrix:
        """Action of an O(3) element given as a 3x3 rational matrix."""
        base = Matrix(q, 3) if self.kind == "vector" else _s_conj(q)
        if self.parity < 0:
            base = base * determinant(Matrix(q, 3))
        return base

    def check(self) -> list:
        """Violated invariants, empty when the data define an O(3) representation."""
        bad = []
        g = self.gens
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            if g[a] @ g[b] - g[b] @ g[a] != g[c]:
                bad.append(f"[g{a + 1}, g{b + 1}] != g{c + 1}")
        R = self.reflection
        if R @ R != Matrix.identity(self.dim):
            bad.append("reflection does not square to 1")
        # r hat(v) r^{-1} = hat(det(r) r v) = -hat(r v)
        for i in range(3):
            rv = B.mat_vec(REFLECTION, B.E[i])
            expected = Matrix.zeros(self.dim, self.dim)
            for c, gen in zip(rv, g):
                if c:
                    expected = expected + gen * (-c)
            if R @ g[i] @ R != expected:
                bad.append(f"reflection does not normalize g{i + 1}")
        return bad


def standard_rep(name: str) -> Rep:
    if name in ("R3", "R3bar"):
        gens = tuple(_vector_action(B.hat(e)) for e in B.E)
        refl = Matrix(REFLECTION, 3)
        parity, kind, dim = (1 if name == "R3" else -1), "vector", 3
    elif name in ("s", "sbar"):
        gens = tuple(_s_ad(B.hat(e)) for e in B.E)
        refl = _s_conj(REFLECTION)
        parity, kind, dim = (1 if name == "s" else -1), "s", 5
    else:
        raise ValueError(f"unknown representation {name!r}; use R3, R3bar, s or sbar")
    if parity < 0:
        refl = -refl
    rep = Rep(name, dim, gens, refl, parity, kind)
    bad = rep.check()
    if bad:
        raise AssertionError(f"{name}: {bad}")
    return rep


def minus_identity_sign(rep: Rep) -> int:
    """Scalar by which -I in O(3) acts."""
    return (-1 if rep.kind == "vector" else 1) * rep.parity


# --- bilinear maps -------------------------------------------------------

class BilinearMap:
    """``L(u, v)`` stored as ``tensor[k][i][j]`` = component k of L(e_i, f_j)."""

    def __init__(self, V1: Rep, V2: Rep, W: Rep, tensor, name: str = ""):
        self.V1, self.V2, self.W = V1, V2, W
        self.tensor = tuple(tuple(tuple(row) for row in mat) for mat in tensor)
        self.name = name

    @classmethod
    def from_function(cls, V1: Rep, V2: Rep, W: Rep, fn: Callable, name: str = ""):
        T = [[[ZERO] * V2.dim for _ in range(V1.dim)] for _ in range(W.dim)]
        for i in range(V1.dim):
            u = B.unit(i, V1.dim)
            for j in range(V2.dim):
                w = fn(u, B.unit(j, V2.dim))
                for k in range(W.dim):
                    T[k][i][j] = w[k]
        return cls(V1, V2, W, T, name)

    @classmethod
    def from_vector(cls, V1: Rep, V2: Rep, W: Rep, flat: Sequence, name: str = ""):
        n1, n2 = V1.dim, V2.dim
        T = [[[flat[(k * n1 + i) * n2 + j] for j in range(n2)] for i in range(n1)]
             for k in range(W.dim)]
        return cls(V1, V2, W, T, name)

    def flat(self) -> tuple:
        return tuple(x for mat in self.tensor for row in mat for x in row)

    def __call__(self, u: Sequence, v: Sequence) -> tuple:
        out = []
        for mat in self.tensor:
            s = ZERO
            for a, row in zip(u, mat):
                if a:
                    for b, x in zip(v, row):
                        if b and x:
                            s = s + a * b * x
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.flat())

    def is_equivariant_at(self, q) -> bool:
        """Finite check L(q u, q v) = q L(u, v) on basis vectors for an O(3) matrix q."""
        R1 = self.V1.group_matrix(q)
        R2 = self.V2.group_matrix(q)
        RW = self.W.group_matrix(q)
        for i in range(self.V1.dim):
            u = B.unit(i, self.V1.dim)
            for j in range(self.V2.dim):
                v = B.unit(j, self.V2.dim)
                if self(R1.apply(u), R2.apply(v)) != RW.apply(self(u, v)):
                    return False
        return True


def _equivariance_rows(V1: Rep, V2: Rep, W: Rep, group: str) -> list:
    n1, n2, m = V1.dim, V2.dim, W.dim
    N = m * n1 * n2

    def idx(k, i, j):
        return (k * n1 + i) * n2 + j

    rows = []
    for g1, g2, gw in zip(V1.gens, V2.gens, W.gens):
        for k in range(m):
            for i in range(n1):
                for j in range(n2):
                    row = [ZERO] * N
                    for mm in range(m):
                        c = gw[k, mm]
                        if c:
                            row[idx(mm, i, j)] += c
                    for a in range(n1):
                        c = g1[a, i]
                        if c:
                            row[idx(k, a, j)] -= c
                    for b in range(n2):
                        c = g2[b, j]
                        if c:
                            row[idx(k, i, b)] -= c
                    if any(row):
                        rows.append(row)
    if group == "O3":
        R1, R2, RW = V1.reflection, V2.reflection, W.reflection
        for k in range(m):
            for i in range(n1):
                for j in range(n2):
                    row = [ZERO] * N
                    for mm in range(m):
                        c = RW[k, mm]
                        if c:
                            row[idx(mm, i, j)] += c
                    for a in range(n1):
                        ca = R1[a, i]
                        if not ca:
                            continue
                        for b in range(n2):
                            cb = R2[b, j]
                            if cb:
                                row[idx(k, a, b)] -= ca * cb
                    if any(row):
                        rows.append(row)
    elif group != "SO3":
        raise ValueError(f"group must be O3 or SO3, got {group!r}")
    return rows


def _as_rep(r) -> Rep:
    return r if isinstance(r, Rep) else standard_rep(r)


def equivariant_bilinear_basis(V1, V2, W, group: str = "O3") -> list:
    """Basis of the space of equivariant bilinear maps V1 x V2 -> W."""
    V1, V2, W = _as_rep(V1), _as_rep(V2), _as_rep(W)
    rows = _equivariance_rows(V1, V2, W, group)
    N = W.dim * V1.dim * V2.dim
    kernel = kernel_of_rows(rows, N)
    return [BilinearMap.from_vector(V1, V2, W, v, f"{V1.name}x{V2.name}->{W.name}")
            for v in kernel]


def predicted_dimension(V1, V2, W, group: str = "O3") -> int:
    """Clebsch-Gordan count for SO(3) plus the -I parity bookkeeping for O(3)."""
    V1, V2, W = _as_rep(V1), _as_rep(V2), _as_rep(W)
    l = {"vector": 1, "s": 2}
    l1, l2, lw = l[V1.kind], l[V2.kind], l[W.kind]
    so3 = 1 if abs(l1 - l2) <= lw <= l1 + l2 else 0
    if group == "SO3":
        return so3
    return so3 if minus_identity_sign(V1) * minus_identity_sign(V2) == minus_identity_sign(W) else 0


# --- the five named maps -------------------------------------------------

NAMED = {
    "M1": ("R3", "R3", "R3bar", lambda v, w: B.cross(v, w)),
    "M2": ("R3", "R3", "s", lambda v, w: B.odot(v, w)),
    "M3": ("R3", "s", "R3", lambda v, A: B.s_apply(A, v)),
    "M4": ("R3", "s", "sbar", lambda v, A: B.rot_s(v, A)),
    "M5": ("s", "s", "R3bar", lambda A, C: B.star_bracket(A, C)),
}


def named_map(map_id: str) -> BilinearMap:
    try:
        a, b, c, fn = NAMED[map_id]
    except KeyError:
        raise ValueError(f"unknown map {map_id!r}; use one of {sorted(NAMED)}") from None
    return BilinearMap.from_function(standard_rep(a), standard_rep(b), standard_rep(c), fn, map_id)


def spans_same_line(basis: list, L: BilinearMap) -> bool:
    """True if ``basis`` is one map and L is a non-zero multiple of it."""
    if len(basis) != 1 or L.is_zero():
        return False
    return Subspace(len(L.flat()), [basis[0].flat()]).contains(L.flat())


def cayley(a: Sequence) -> list:
    """Rotation (I - hat a)^{-1} (I + hat a) with rational entries."""
    A = Matrix(B.hat(a), 3)
    I3 = Matrix.identity(3)
    return [list(r) for r in (inverse(I3 - A) @ (I3 + A)).entries]


# --- commutant and invariant ideals of f[3,3] ----------------------------

def direct_sum_rep(*reps: Rep, name: str = "") -> Rep:
    dim = sum(r.dim for r in reps)

    def blockdiag(mats):
        M = [[ZERO] * dim for _ in range(dim)]
        off = 0
        for m in mats:
            for i in range(m.rows):
                for j in range(m.cols):
                    M[off + i][off + j] = m[i, j]
            off += m.rows
        return Matrix(M, dim)

    gens = tuple(blockdiag([r.gens[i] for r in reps]) for i in range(3))
    refl = blockdiag([r.reflection for r in reps])
    return Rep(name or "+".join(r.name for r in reps), dim, gens, refl, 1, "sum")


def commutant(rep: Rep) -> list:
    """Basis of matrices commuting with the generators and the reflection."""
    n = rep.dim
    mats = list(rep.gens) + [rep.reflection]
    rows = []
    for G in mats:
        # (T G - G T)[a][b] = sum_c T[a][c] G[c][b] - G[a][c] T[c][b]
        for a in range(n):
            for b in range(n):
                row = [ZERO] * (n * n)
                for c in range(n):
                    g = G[c, b]
                    if g:
                        row[a * n + c] += g
                    g = G[a, c]
                    if g:
                        row[c * n + b] -= g
                if any(row):
                    rows.append(row)
    return [Matrix([v[i * n:(i + 1) * n] for i in range(n)], n) for v in kernel_of_rows(rows, n * n)]


def f33_rep() -> Rep:
    """The O(3) action (q x, det q q y, det q q S q^{-1}, q z) on the f[3,3] model."""
    return direct_sum_rep(standard_rep("R3"), standard_rep("R3bar"), standard_rep("sbar"),
                          standard_rep("R3"), name="f33")


def f3_rep() -> Rep:
    return direct_sum_rep(standard_rep("sbar"), standard_rep("R3"), name="f3")


def graph_subspace(lam) -> Subspace:
    """P_lambda = {(x, 0, 0, lambda x)}; ``None`` stands for lambda = infinity (the z-block)."""
    if lam is None:
        return Subspace.coordinate(14, range(11, 14))
    vecs = []
    for i in range(3):
        v = [ZERO] * 14
        v[i] = Fraction(1)
        v[11 + i] = Fraction(lam)
        vecs.append(v)
    return Subspace(14, vecs)


def graph_f2_projection_symbolic() -> tuple:
    """f2-part of [(x,0,0,lam x), (x',0,0,0)] with lam and the coordinates symbolic.

    Returns the y-block as polynomials; it does not involve ``lam``.
    """
    lam = MultiPoly.var("lam")
    x = tuple(MultiPoly.var(f"x{i + 1}") for i in range(3))
    xp = tuple(MultiPoly.var(f"xp{i + 1}") for i in range(3))
    zero = MultiPoly.const(0)
    u = x + (zero,) * 8 + tuple(lam * c for c in x)
    v = xp + (zero,) * 11
    w = f33_bracket(u, v)
    return B.split(w, F33_SIZES)[1]


@dataclass
class IdealSearch:
    ideals: list
    closures: dict        # label -> closure Subspace of each irreducible
    graph_certificate: bool
    sampled: dict         # lambda -> closure contains the center


def invariant_ideals_f33(samples=(0, 1, -1, 2, -2, Fraction(1, 2))) -> IdealSearch:
    """Invariant ideals of f[3,3] not containing the top layer.

    Irreducible invariant subspaces are y (type R3bar), S (type sbar) and the
    graph family P_lambda inside the two R3-type blocks x and z.  Each ideal is
    a sum of ideal closures of irreducibles, so it suffices to keep the
    closures that miss part of the top layer and then close under sums.
    """
    g = f33_model()
    top = Subspace.coordinate(14, range(6, 14))
    y_block = Subspace.coordinate(14, range(3, 6))
    s_block = Subspace.coordinate(14, range(6, 11))
    closures = {
        "y": ideal_closure(g, y_block),
        "S": ideal_closure(g, s_block),
        "z": ideal_closure(g, graph_subspace(None)),
    }
    f2proj = graph_f2_projection_symbolic()
    certificate = all("lam" not in p.variables for p in f2proj) and any(f2proj)
    sampled = {}
    for lam in samples:
        cl = ideal_closure(g, graph_subspace(lam))
        sampled[Fraction(lam)] = top.is_subspace_of(cl)
    # with the certificate, every finite lambda behaves like the samples
    graph_survives = not certificate or not all(sampled.values())
    kept = [cl for name, cl in closures.items() if not top.is_subspace_of(cl)]
    if graph_survives:
        kept += [ideal_closure(g, graph_subspace(l)) for l in samples
                 if not top.is_subspace_of(ideal_closure(g, graph_subspace(l)))]
    found = {Subspace.zero(14)}
    frontier = list(kept)
    while frontier:
        I = frontier.pop()
        if top.is_subspace_of(I) or I in found:
            continue
        found.add(I)
        frontier.extend(I + J for J in list(found))
    ideals = sorted(found, key=lambda s: (s.dim, s.pivots))
    return IdealSearch(ideals, closures, certificate, sampled)
