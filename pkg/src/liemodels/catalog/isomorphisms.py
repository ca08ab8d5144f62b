"""Explicit isomorphisms between the model-space algebras and classical algebras.

Every map is assembled from its formula and then certified with
:func:`check_map`; a failed certificate raises :class:`IsomorphismError`.
"""

from __future__ import annotations

from fractions import Fraction

from .. import blocks as B
from ..lie import LieAlgebra, LieError, LinearMap, check_map, direct_sum, realify
from ..scalars import GaussianRational, UnsupportedParameterError, rational_sqrt
from .classical import b_algebra, block_form, g2_compact, g2_split, so3, so3_so3, so_block
from .families import a33_algebra, c33_algebra
from .tables import _semidirect_block, discriminant, kappa_exceptional, off_locus, roots_k, zeta

ZERO = Fraction(0)

KINDS = ("lemma_bk", "lemma_complex", "lemma_exceptional", "a33_to_g2c", "a33_to_g2s",
         "scaling_c33", "scaling_a33", "b1_so3so3", "so3c_so31")

# three on-locus parameter instances per kind
INSTANCES = {
    "lemma_bk": [{"a1": 5, "a2": -4}, {"a1": 3, "a2": 4}, {"a1": -5, "a2": -4}],
    "lemma_complex": [{"a1": 0, "a2": -4}, {"a1": 6, "a2": -25}, {"a1": -6, "a2": -25}],
    "lemma_exceptional": [{"a1": 2, "a2": -1}, {"a1": -2, "a2": -1}, {"a1": 8, "a2": -16}],
    "a33_to_g2c": [{"kappa": 1}, {"kappa": 4}, {"kappa": Fraction(1, 4)}],
    "a33_to_g2s": [{"kappa": -1}, {"kappa": -4}, {"kappa": Fraction(-1, 9)}],
    "scaling_c33": [{"a1": 5, "a2": -4, "lam": 2}, {"a1": 3, "a2": 4, "lam": 3},
                    {"a1": 0, "a2": -1, "lam": Fraction(1, 2)}],
    "scaling_a33": [{"kappa": 1, "lam": 2}, {"kappa": -3, "lam": 3},
                    {"kappa": Fraction(1, 2), "lam": Fraction(-1, 2)}],
    "b1_so3so3": [{}],
    "so3c_so31": [{}],
}


class IsomorphismError(LieError):
    """A constructed map failed its isomorphism certificate."""


def _images(source: LieAlgebra, fn) -> list:
    return [list(fn(source.unit(i))) for i in range(source.dim)]


def _certify(phi: LinearMap) -> LinearMap:
    res = check_map(phi, "isomorphism")
    if not res:
        raise IsomorphismError(f"{phi.name}: {res.reason}")
    return phi


def _c33_split(v):
    return B.split(v, (3, 3, 3, 3))


# --- C33 lemmas ----------------------------------------------------------

def lemma_bk(a1, a2) -> LinearMap:
    """c33(a1, a2) -> b_k + b_khat, (x,y,z,w) -> (x + k z, w + k y) + (x + khat z, w + khat y)."""
    if discriminant(a1, a2) <= 0:
        raise off_locus("lemma_bk needs a1^2 + 4 a2 > 0")
    k, kh = roots_k(a1, a2)
    g = c33_algebra(a1, a2)
    h = direct_sum(b_algebra(k), b_algebra(kh), f"b({k})+b({kh})")

    def psi(v):
        x, y, z, w = _c33_split(v)
        return B.join(B.add(x, B.scale(k, z)), B.add(w, B.scale(k, y)),
                      B.add(x, B.scale(kh, z)), B.add(w, B.scale(kh, y)))

    return LinearMap.from_images(g, h, _images(g, psi), "lemma_bk")


def _phi_31(model, v) -> list:
    """star^-1 v -> [[star^-1 Re v, Im v], [Im v^t, 0]] in so(3,1) block coordinates."""
    re = [z.re for z in v]
    im = [z.im for z in v]
    return list(model.coords(block_form(3, -1, B.hat(re), im)))


def lemma_complex(a1, a2) -> LinearMap:
    """c33(a1, a2) -> so(3,1) + so(3,1) through b_1 complexified, for a1^2 + 4 a2 < 0."""
    z = zeta(a1, a2)
    z2, z3 = z * z, z * z * z
    m = so_block(3, -1)
    g = c33_algebra(a1, a2)
    h = direct_sum(m.algebra, m.algebra, "so(3,1)+so(3,1)")

    def cz(c, u):
        return [c * GaussianRational(t) for t in u]

    def psi(v):
        x, y, zz, w = _c33_split(v)
        base = [GaussianRational(t) for t in w]
        ypart = cz(z2, y)
        odd = [a + b for a, b in zip(cz(z, x), cz(z3, zz))]
        v1 = [a + b + c for a, b, c in zip(base, ypart, odd)]
        v2 = [a + b - c for a, b, c in zip(base, ypart, odd)]
        return _phi_31(m, v1) + _phi_31(m, v2)

    return LinearMap.from_images(g, h, _images(g, psi), "lemma_complex")


def lemma_exceptional(a1, a2) -> LinearMap:
    """c33(a1, a2) -> so(4) or so(3,1) semidirect R^3 x R^3, for a1^2 + 4 a2 = 0, a1 != 0."""
    a1, a2 = Fraction(a1), Fraction(a2)
    if discriminant(a1, a2) != 0 or a1 == 0:
        raise off_locus("lemma_exceptional needs a1^2 + 4 a2 = 0 and a1 != 0")
    kap = kappa_exceptional(a1)
    sign = 1 if a1 > 0 else -1
    m, h, _ = _semidirect_block(3, sign)
    g = c33_algebra(a1, a2)
    k2, k3 = kap * kap, kap * kap * kap

    def phi(v):
        x, y, z, w = _c33_split(v)
        A = B.hat(B.add(w, B.scale(sign * k2, y)))
        b = B.add(B.scale(-sign * kap, x), B.scale(-k3, z))
        mod = B.join(B.add(B.scale(Fraction(3, 2) * k3, z), B.scale(sign * kap / 2, x)),
                     B.scale(k2, y))
        return list(m.coords(block_form(3, sign, A, b))) + list(mod)

    return LinearMap.from_images(g, h, _images(g, phi), "lemma_exceptional")


# --- A33 to g2 -----------------------------------------------------------

def _a33_split(v):
    return B.split(v, (3, 3, 5, 3))


def a33_to_g2c(kappa) -> LinearMap:
    """a33(a^2) -> g2 compact: (x,y,S,w) -> (12 a^3 i S + star^-1(w + 3a^2 y), -2a^2 y + i a x)."""
    kappa = Fraction(kappa)
    if kappa <= 0:
        raise off_locus("a33_to_g2c needs kappa > 0")
    a = rational_sqrt(kappa, "a = sqrt(kappa)")
    g, h = a33_algebra(kappa), g2_compact()

    def phi(v):
        x, y, S, w = _a33_split(v)
        return B.join(B.scale(12 * a ** 3, S), B.add(w, B.scale(3 * a * a, y)),
                      B.scale(a, x), B.scale(-2 * a * a, y))

    return LinearMap.from_images(g, h, _images(g, phi), "a33_to_g2c")


def a33_to_g2s(kappa) -> LinearMap:
    """a33(-a^2) -> g2 split: (x,y,S,w) -> (a x + 2a^2 y, -a x + 2a^2 y, -12 a^3 S, w - 3a^2 y)."""
    kappa = Fraction(kappa)
    if kappa >= 0:
        raise off_locus("a33_to_g2s needs kappa < 0")
    a = rational_sqrt(-kappa, "a = sqrt(-kappa)")
    g, h = a33_algebra(kappa), g2_split()

    def phi(v):
        x, y, S, w = _a33_split(v)
        ax, ay = B.scale(a, x), B.scale(2 * a * a, y)
        return B.join(B.add(ax, ay), B.sub(ay, ax), B.scale(-12 * a ** 3, S),
                      B.sub(w, B.scale(3 * a * a, y)))

    return LinearMap.from_images(g, h, _images(g, phi), "a33_to_g2s")


# --- scalings ------------------------------------------------------------

def _lam(lam) -> Fraction:
    lam = Fraction(lam)
    if lam == 0:
        raise off_locus("scaling needs lam != 0")
    return lam


def scaling_c33(a1, a2, lam) -> LinearMap:
    """c33(a1, a2) -> c33(a1/lam^2, a2/lam^4), (x,y,z,w) -> (lam x, lam^2 y, lam^3 z, w)."""
    a1, a2, lam = Fraction(a1), Fraction(a2), _lam(lam)
    g, h = c33_algebra(a1, a2), c33_algebra(a1 / lam ** 2, a2 / lam ** 4)

    def phi(v):
        x, y, z, w = _c33_split(v)
        return B.join(B.scale(lam, x), B.scale(lam ** 2, y), B.scale(lam ** 3, z), w)

    return LinearMap.from_images(g, h, _images(g, phi), "scaling_c33")


def scaling_a33(kappa, lam) -> LinearMap:
    """a33(kappa) -> a33(kappa/lam^2), (x,y,S,w) -> (lam x, lam^2 y, lam^3 S, w)."""
    kappa, lam = Fraction(kappa), _lam(lam)
    g, h = a33_algebra(kappa), a33_algebra(kappa / lam ** 2)

    def phi(v):
        x, y, S, w = _a33_split(v)
        return B.join(B.scale(lam, x), B.scale(lam ** 2, y), B.scale(lam ** 3, S), w)

    return LinearMap.from_images(g, h, _images(g, phi), "scaling_a33")


# --- small classical identifications ------------------------------------

def b1_so3so3() -> LinearMap:
    """b_1 -> so(3) + so(3), (x, y) -> (star^-1(y + x), star^-1(y - x))."""
    g, h = b_algebra(1), so3_so3()

    def phi(v):
        x, y = v[:3], v[3:]
        return B.join(B.add(y, x), B.sub(y, x))

    return LinearMap.from_images(g, h, _images(g, phi), "b1_so3so3")


def so3_complex() -> LieAlgebra:
    """so(3) with Gaussian scalars in the star^-1 basis."""
    s = so3()
    return LieAlgebra("so(3,C)", s.labels, s.brackets, {}, "gaussian")


def so3c_so31() -> LinearMap:
    """so(3)^C (realified) -> so(3,1), star^-1 x -> [[star^-1 Re x, Im x], [Im x^t, 0]]."""
    g = realify(so3_complex())
    m = so_block(3, -1)

    def phi(v):
        x = [GaussianRational(a, b) for a, b in zip(v[:3], v[3:])]
        return _phi_31(m, x)

    return LinearMap.from_images(g, m.algebra, _images(g, phi), "so3c_so31")


def build_isomorphism(kind: str, params: dict | None = None) -> LinearMap:
    """Construct and certify the named isomorphism."""
    params = dict(params or {})
    if kind not in KINDS:
        raise ValueError(f"unknown isomorphism kind {kind!r}; choose from {', '.join(KINDS)}")
    if not params and INSTANCES[kind]:
        params = dict(INSTANCES[kind][0])
    try:
        if kind == "lemma_bk":
            phi = lemma_bk(params["a1"], params["a2"])
        elif kind == "lemma_complex":
            phi = lemma_complex(params["a1"], params["a2"])
        elif kind == "lemma_exceptional":
            phi = lemma_exceptional(params["a1"], params["a2"])
        elif kind == "a33_to_g2c":
            phi = a33_to_g2c(params["kappa"])
        elif kind == "a33_to_g2s":
            phi = a33_to_g2s(params["kappa"])
        elif kind == "scaling_c33":
            phi = scaling_c33(params["a1"], params["a2"], params["lam"])
        elif kind == "scaling_a33":
            phi = scaling_a33(params["kappa"], params["lam"])
        elif kind == "b1_so3so3":
            phi = b1_so3so3()
        else:
            phi = so3c_so31()
    except KeyError as exc:
        raise UnsupportedParameterError(f"{kind}: missing parameter {exc.args[0]}") from None
    return _certify(phi)
