"""Explicit descriptions of the model spaces with nilpotentization C33 (and C_{n,3}).

Each case yields the listed algebra together with its basis families:
``A`` (horizontal, k = 0), or ``B`` (horizontal) and ``C`` (isotropy),
as linear maps out of an abelian R^n (resp. so(n) for ``C`` when n != 3).

Parameters must lie on the rational locus of the radicals involved;
otherwise :class:`UnsupportedParameterError` names the failing radical.
"""

from __future__ import annotations

from fractions import Fraction

from .. import blocks as B
from ..lie import LieAlgebra, LinearMap, direct_sum, realify, semidirect
from ..linalg import Matrix, Subspace
from ..model import ModelAlgebra
from ..scalars import GaussianRational, UnsupportedParameterError, gaussian_sqrt, rational_sqrt
from .classical import block_form, so3, so_block

ZERO = Fraction(0)

# (table, case) -> (algebra description, a rational-locus instance (a1, a2))
CASES = {
    (1, "a2_pos"): ("so(3)+so(3,1)", (3, 4)),
    (1, "a2_zero_a1_neg"): ("R^3+so(3,1)", (-4, 0)),
    (1, "a2_zero_a1_pos"): ("R^3+so(4)", (4, 0)),
    (1, "a2_neg_a1_pos"): ("so(3)+so(4)", (5, -4)),
    (1, "exceptional"): ("so(3) |x (R^3 x R^3)", (2, -1)),
    (2, "a2_neg_a1_neg"): ("so(3,1)+so(3,1)", (-5, -4)),
    (2, "exceptional"): ("so(3,1) |x (R^3 x R^3)", (-2, -1)),
    (2, "complex"): ("so(3,1)+so(3,1)", (0, -4)),
    (3, "a2_pos"): ("so(n+1)+so(n,1)", (3, 4)),
    (3, "a2_neg_a1_pos"): ("so(n+1)+so(n+1)", (5, -4)),
    (3, "a2_neg_a1_neg"): ("so(n,1)+so(n,1)", (-5, -4)),
    (3, "complex"): ("so(n+1,C)", (0, -4)),
    (3, "a2_zero"): ("R^n+so(n+1) or R^n+so(n,1)", (4, 0)),
    (3, "exceptional"): ("so(n+1) or so(n,1) |x (R^n x so(n))", (2, -1)),
}


def off_locus(msg: str) -> UnsupportedParameterError:
    return UnsupportedParameterError(f"off-locus parameters: {msg}")


def discriminant(a1, a2) -> Fraction:
    return Fraction(a1) ** 2 + 4 * Fraction(a2)


def roots_k(a1, a2) -> tuple:
    """k >= k_hat with k + k_hat = a1 and -k k_hat = a2 (needs a rational discriminant root)."""
    a1, a2 = Fraction(a1), Fraction(a2)
    r = rational_sqrt(discriminant(a1, a2), "sqrt(a1^2 + 4 a2)")
    return (a1 + r) / 2, (a1 - r) / 2


def kappas(a1, a2) -> tuple:
    """kappa = |a1 + sqrt(D)|^(1/2) / sqrt(2) and kappa_hat likewise with the minus sign."""
    k, kh = roots_k(a1, a2)
    return rational_sqrt(abs(k), "kappa"), rational_sqrt(abs(kh), "kappa_hat")


def kappa_exceptional(a1) -> Fraction:
    return rational_sqrt(abs(Fraction(a1)) / 2, "kappa = sqrt(|a1|/2)")


def zeta(a1, a2) -> GaussianRational:
    """Principal root of zeta^2 = (a1 + i sqrt(|D|)) / 2, for D = a1^2 + 4 a2 < 0."""
    D = discriminant(a1, a2)
    if D >= 0:
        raise off_locus("zeta needs a1^2 + 4 a2 < 0")
    s = rational_sqrt(-D, "sqrt(|a1^2 + 4 a2|)")
    return gaussian_sqrt(GaussianRational(Fraction(a1) / 2, s / 2), "zeta")


def abelian(n: int, name: str | None = None, prefix: str = "x") -> LieAlgebra:
    return LieAlgebra(name or f"R^{n}", [f"{prefix}{i + 1}" for i in range(n)], {})


# --- shared pieces -------------------------------------------------------

def _so_n_matrices(n: int) -> list:
    """Basis of so(n) matching the A-part of so_block(n, .)."""
    if n == 3:
        return [B.hat(e) for e in B.E]
    return [B.antisym(i, j, n) for i in range(n) for j in range(i + 1, n)]


def _so_n_coords(Y, n: int) -> list:
    if n == 3:
        return list(B.vee(Y))
    return [Y[j][i] for i in range(n) for j in range(i + 1, n)]


def _block_coords(model, n: int, sign: int, A, b) -> list:
    return list(model.coords(block_form(n, sign, A, b)))


def _horizontal_map(source: LieAlgebra, target: LieAlgebra, fn, name: str) -> LinearMap:
    return LinearMap.from_images(source, target, [fn(source.unit(i)) for i in range(source.dim)], name)


def _finish(g: LieAlgebra, table: int, case: str, params: dict, hmap: LinearMap,
            cmap: LinearMap | None, hname: str) -> ModelAlgebra:
    p = Subspace(g.dim, [hmap(hmap.source.unit(i)) for i in range(hmap.source.dim)])
    maps = {hname: hmap}
    if cmap is None:
        k = Subspace.zero(g.dim)
    else:
        k = Subspace(g.dim, [cmap(cmap.source.unit(i)) for i in range(cmap.source.dim)])
        maps["C"] = cmap
    return ModelAlgebra(g, p, k, f"table{table}:{case}", params, maps)


def _combine(mats, coeffs, n):
    out = B.mzero(n)
    for c, M in zip(coeffs, mats):
        if c:
            out = B.mat_add(out, B.mat_scale(c, M))
    return out


def _check_locus(table: int, case: str, a1: Fraction, a2: Fraction) -> None:
    D = discriminant(a1, a2)
    conds = {
        "a2_pos": a2 > 0,
        "a2_zero_a1_neg": a2 == 0 and a1 < 0,
        "a2_zero_a1_pos": a2 == 0 and a1 > 0,
        "a2_zero": a2 == 0 and a1 != 0,
        "a2_neg_a1_pos": a2 < 0 and a1 > 0 and D > 0,
        "a2_neg_a1_neg": a2 < 0 and a1 < 0 and D > 0,
        "complex": D < 0,
    }
    if case == "exceptional":
        ok = D == 0 and a2 < 0
        if table == 1:
            ok = ok and a1 > 0
        elif table == 2:
            ok = ok and a1 < 0
    else:
        ok = conds[case]
    if not ok:
        raise off_locus(f"table {table} case {case} does not hold at (a1, a2) = ({a1}, {a2})")


# --- theta for the semidirect rows ---------------------------------------

def _theta_table1(x) -> list:
    """theta(star^-1 x)(z, y) = 1/2 (x cross (z - y), x cross (y - z))."""
    h = B.mat_scale(Fraction(1, 2), B.hat(x))
    nh = B.mat_scale(Fraction(-1, 2), B.hat(x))
    return [h[i] + nh[i] for i in range(3)] + [nh[i] + h[i] for i in range(3)]


def _theta_n3(sign: int, w, x) -> list:
    """(z, y) -> (w x z - sign x cross y, w x y - x cross z) for [[star^-1 w, x], [-sign x^t, 0]]."""
    hw, hx = B.hat(w), B.hat(x)
    top = [hw[i] + [-sign * c for c in hx[i]] for i in range(3)]
    bot = [[-c for c in hx[i]] + hw[i] for i in range(3)]
    return top + bot


def _theta_general(n: int, sign: int, A, x) -> list:
    """Matrix of (z, Y) -> (Az + sign Yx, [A, Y] - x wedge z) on R^n x so(n)."""
    mats = _so_n_matrices(n)
    m = len(mats)
    cols = []
    for i in range(n):          # unit z
        z = B.unit(i, n)
        top = B.mat_vec(A, z)
        wedge = B.mat_sub(B.outer(z, x), B.outer(x, z))
        cols.append(list(top) + [-c for c in _so_n_coords(wedge, n)])
    for Y in mats:              # unit Y
        top = B.scale(sign, B.mat_vec(Y, x))
        cols.append(list(top) + _so_n_coords(B.commutator(A, Y), n))
    size = n + m
    return [[cols[c][r] for c in range(size)] for r in range(size)]


def _semidirect_block(n: int, sign: int) -> tuple:
    model = so_block(n, sign)
    theta = []
    for M in model.basis:
        A = [row[:n] for row in M[:n]]
        x = [M[i][n] for i in range(n)]
        if n == 3:
            theta.append(Matrix(_theta_n3(sign, B.vee(A), x)))
        else:
            theta.append(Matrix(_theta_general(n, sign, A, x)))
    if n == 3:
        labels = [f"z{i + 1}" for i in range(3)] + [f"y{i + 1}" for i in range(3)]
        size = 6
    else:
        labels = [f"z{i + 1}" for i in range(n)] + [f"Y{i + 1}{j + 1}" for i in range(n)
                                                    for j in range(i + 1, n)]
        size = n + n * (n - 1) // 2
    g = semidirect(model.algebra, size, theta, f"{model.name}|x(R^{n} x so({n}))", labels)
    return model, g, size


# --- the tables ----------------------------------------------------------

def _table1(case: str, a1, a2) -> ModelAlgebra:
    params = {"a1": a1, "a2": a2}
    R3 = abelian(3)
    if case == "exceptional":
        kap = kappa_exceptional(a1)
        theta = [Matrix(_theta_table1(e)) for e in B.E]
        g = semidirect(so3(), 6, theta, "so(3)|x(R^3 x R^3)",
                       ["z1", "z2", "z3", "y1", "y2", "y3"])
        hmap = _horizontal_map(R3, g, lambda x: list(B.scale(2 * kap, x))
                               + list(B.scale(-kap / 2, x)) + [ZERO] * 3, "A")
        return _finish(g, 1, case, params, hmap, None, "A")
    kap, kap_hat = kappas(a1, a2)
    if case in ("a2_zero_a1_neg", "a2_zero_a1_pos"):
        sign = 1 if case == "a2_zero_a1_pos" else -1
        c = kap if sign > 0 else kap_hat
        m = so_block(3, sign)
        g = direct_sum(abelian(3, "R^3", "u"), m.algebra, f"R^3+{m.name}")
        hmap = _horizontal_map(R3, g, lambda x: list(x)
                               + _block_coords(m, 3, sign, B.mzero(3), B.scale(c, x)), "A")
        return _finish(g, 1, case, params, hmap, None, "A")
    sign = -1 if case == "a2_pos" else 1
    m = so_block(3, sign)
    g = direct_sum(so3(), m.algebra, f"so(3)+{m.name}")
    hmap = _horizontal_map(R3, g, lambda x: list(B.scale(2 * kap, x))
                           + _block_coords(m, 3, sign, B.hat(B.scale(kap, x)), B.scale(kap_hat, x)),
                           "A")
    return _finish(g, 1, case, params, hmap, None, "A")


def _c_w_pair(m1, m2, s1, s2):
    def cw(w):
        return (_block_coords(m1, 3, s1, B.hat(w), [ZERO] * 3)
                + _block_coords(m2, 3, s2, B.hat(w), [ZERO] * 3))
    return cw


def _table2(case: str, a1, a2) -> ModelAlgebra:
    params = {"a1": a1, "a2": a2}
    R3, W3 = abelian(3), abelian(3, "R^3", "w")
    zero = B.mzero(3)
    if case == "exceptional":
        kap = kappa_exceptional(a1)
        m, g, _ = _semidirect_block(3, -1)
        hmap = _horizontal_map(R3, g, lambda x: _block_coords(m, 3, -1, zero, B.scale(kap, x))
                               + list(B.scale(-kap / 2, x)) + [ZERO] * 3, "B")
        cmap = _horizontal_map(W3, g, lambda w: _block_coords(m, 3, -1, B.hat(w), [ZERO] * 3)
                               + [ZERO] * 6, "C")
        return _finish(g, 2, case, params, hmap, cmap, "B")
    m1 = m2 = so_block(3, -1)
    g = direct_sum(m1.algebra, m2.algebra, "so(3,1)+so(3,1)")
    if case == "complex":
        z = zeta(a1, a2)
        params["zeta"] = z

        def bx(x):
            return (_block_coords(m1, 3, -1, B.hat(B.scale(z.re, x)), B.scale(z.im, x))
                    + _block_coords(m2, 3, -1, B.hat(B.scale(-z.re, x)), B.scale(-z.im, x)))
    else:
        kap, kap_hat = kappas(a1, a2)

        def bx(x):
            return (_block_coords(m1, 3, -1, zero, B.scale(kap, x))
                    + _block_coords(m2, 3, -1, zero, B.scale(kap_hat, x)))
    hmap = _horizontal_map(R3, g, bx, "B")
    cmap = _horizontal_map(W3, g, _c_w_pair(m1, m2, -1, -1), "C")
    return _finish(g, 2, case, params, hmap, cmap, "B")


def _isotropy_source(n: int) -> LieAlgebra:
    if n == 3:
        return abelian(3, "R^3", "w")
    return abelian(n * (n - 1) // 2, f"so({n})", "A")


def _table3(case: str, a1, a2, n: int) -> ModelAlgebra:
    if n < 2 or n > 5:
        raise ValueError("table 3 supported for 2 <= n <= 5")
    params = {"a1": a1, "a2": a2, "n": n}
    Rn = abelian(n)
    zero = B.mzero(n)
    mats = _so_n_matrices(n)
    csrc = _isotropy_source(n)
    if case in ("a2_pos", "a2_neg_a1_pos", "a2_neg_a1_neg"):
        kap, kap_hat = kappas(a1, a2)
        s1, s2 = {"a2_pos": (1, -1), "a2_neg_a1_pos": (1, 1), "a2_neg_a1_neg": (-1, -1)}[case]
        m1, m2 = so_block(n, s1), so_block(n, s2)
        g = direct_sum(m1.algebra, m2.algebra, f"{m1.name}+{m2.name}")

        def bx(x):
            return (_block_coords(m1, n, s1, zero, B.scale(kap, x))
                    + _block_coords(m2, n, s2, zero, B.scale(kap_hat, x)))

        def ca(a):
            A = _combine(mats, a, n)
            return _block_coords(m1, n, s1, A, [ZERO] * n) + _block_coords(m2, n, s2, A, [ZERO] * n)

        return _finish(g, 3, case, params, _horizontal_map(Rn, g, bx, "B"),
                       _horizontal_map(csrc, g, ca, "C"), "B")
    if case == "complex":
        z = zeta(a1, a2)
        params["zeta"] = z
        m = so_block(n, 1)
        gc = LieAlgebra(f"so({n + 1},C)", m.algebra.labels, m.algebra.brackets, {}, "gaussian")
        g = realify(gc, f"so({n + 1},C)_R")
        half = m.algebra.dim

        def bx(x):
            re = _block_coords(m, n, 1, zero, B.scale(z.re, x))
            im = _block_coords(m, n, 1, zero, B.scale(z.im, x))
            return re + im

        def ca(a):
            return _block_coords(m, n, 1, _combine(mats, a, n), [ZERO] * n) + [ZERO] * half

        return _finish(g, 3, case, params, _horizontal_map(Rn, g, bx, "B"),
                       _horizontal_map(csrc, g, ca, "C"), "B")
    if case == "a2_zero":
        sign = 1 if a1 > 0 else -1
        r = rational_sqrt(abs(a1), "sqrt(|a1|)")
        m = so_block(n, sign)
        g = direct_sum(abelian(n, f"R^{n}", "u"), m.algebra, f"R^{n}+{m.name}")
        hmap = _horizontal_map(Rn, g, lambda x: list(x)
                               + _block_coords(m, n, sign, zero, B.scale(r, x)), "A")
        return _finish(g, 3, case, params, hmap, None, "A")
    if case == "exceptional":
        sign = 1 if a1 > 0 else -1
        kap = kappa_exceptional(a1)
        m, g, size = _semidirect_block(n, sign)
        hmap = _horizontal_map(Rn, g, lambda x: _block_coords(m, n, sign, zero, B.scale(kap, x))
                               + list(B.scale(-sign * kap / 2, x)) + [ZERO] * (size - n), "B")
        cmap = _horizontal_map(csrc, g, lambda a: _block_coords(m, n, sign, _combine(mats, a, n),
                                                                [ZERO] * n) + [ZERO] * size, "C")
        return _finish(g, 3, case, params, hmap, cmap, "B")
    raise ValueError(f"unknown table 3 case {case!r}")


def table_cases(table: int | None = None) -> list:
    return sorted(key for key in CASES if table is None or key[0] == table)


def build_table(table: int, case: str, params: dict | None = None, n: int = 3) -> ModelAlgebra:
    """Model algebra of a table row; ``params`` holds a1, a2 (defaults to the row's instance)."""
    if (table, case) not in CASES:
        raise ValueError(f"unknown table case ({table}, {case!r}); choose from "
                         + ", ".join(f"{t}:{c}" for t, c in table_cases()))
    if params is None:
        params = dict(zip(("a1", "a2"), CASES[(table, case)][1]))
    a1, a2 = Fraction(params["a1"]), Fraction(params["a2"])
    _check_locus(table, case, a1, a2)
    if table == 1:
        return _table1(case, a1, a2)
    if table == 2:
        return _table2(case, a1, a2)
    return _table3(case, a1, a2, n)


def expected_growth(table: int, n: int = 3) -> tuple:
    """Growth of the C_{n,3} nilpotentization: (n, n(n+1)/2, n(n+3)/2)."""
    if table in (1, 2):
        n = 3
    return (n, n * (n + 1) // 2, n * (n + 3) // 2)
