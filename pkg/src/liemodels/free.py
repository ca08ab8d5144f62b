"""Free nilpotent Lie algebras, the f[3,3] block model and its Carnot quotients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import blocks as B
from .lie import LieAlgebra, LinearMap, from_bracket, quotient
from .linalg import Subspace
from .model import ModelAlgebra

ZERO = Fraction(0)


# --- Witt's formula ------------------------------------------------------

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def witt_dim(n: int, k: int) -> int:
    """Dimension of the weight-k layer of the free Lie algebra on n generators."""
    if n < 1 or k < 1:
        raise ValueError("witt_dim needs n >= 1 and k >= 1")
    total = sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
    return total // k


# --- Hall words ----------------------------------------------------------

class HallWord:
    """A generator (1-based index) or a bracket of two Hall words.

    Words are interned by :func:`hall_basis`; ``order`` is the position in
    the weight-then-creation total order used by the normalization.
    """

    __slots__ = ("left", "right", "gen", "weight", "order")

    def __init__(self, gen: int | None = None, left: "HallWord | None" = None,
                 right: "HallWord | None" = None, order: int = -1):
        self.gen = gen
        self.left = left
        self.right = right
        self.weight = 1 if gen is not None else left.weight + right.weight
        self.order = order

    @property
    def is_generator(self) -> bool:
        return self.gen is not None

    def key(self):
        return self.gen if self.is_generator else (self.left.key(), self.right.key())

    def __str__(self):
        if self.is_generator:
            return str(self.gen)
        return f"[{self.left},{self.right}]"

    __repr__ = __str__


def _is_hall_pair(u: HallWord, v: HallWord) -> bool:
    # basic commutator condition: u > v, and for u = [u1, u2] also u2 <= v
    if u.order <= v.order:
        return False
    return u.is_generator or u.right.order <= v.order


@lru_cache(maxsize=None)
def _hall_words(n: int, r: int) -> tuple:
    words: list = []
    by_weight: dict = {}
    for i in range(1, n + 1):
        w = HallWord(gen=i, order=len(words))
        words.append(w)
        by_weight.setdefault(1, []).append(w)
    for k in range(2, r + 1):
        layer = []
        for wu in range(1, k):
            for u in by_weight.get(wu, ()):
                for v in by_weight.get(k - wu, ()):
                    if _is_hall_pair(u, v):
                        layer.append((u.order, v.order, u, v))
        layer.sort(key=lambda t: (t[0], t[1]))
        for _, _, u, v in layer:
            w = HallWord(left=u, right=v, order=len(words))
            words.append(w)
            by_weight.setdefault(k, []).append(w)
    return tuple(words)


def hall_basis(n: int, r: int) -> list:
    """Hall words of weight <= r on n generators, in weight order."""
    if n < 1 or r < 1:
        raise ValueError("hall_basis needs n >= 1 and r >= 1")
    return list(_hall_words(n, r))


class _Normalizer:
    """Rewrites brackets of Hall words as combinations of Hall words.

    Uses antisymmetry and ``[[a1,a2],b] = [[a1,b],a2] - [[a2,b],a1]``;
    anything of weight above the step bound is zero.
    """

    def __init__(self, n: int, r: int):
        self.r = r
        self.words = _hall_words(n, r)
        self.index = {(w.left.order, w.right.order): w.order
                      for w in self.words if not w.is_generator}
        self.cache: dict = {}

    def bracket(self, a: int, b: int) -> dict:
        key = (a, b)
        if key in self.cache:
            return self.cache[key]
        words = self.words
        wa, wb = words[a], words[b]
        if a == b or wa.weight + wb.weight > self.r:
            out = {}
        elif a < b:
            out = {k: -c for k, c in self.bracket(b, a).items()}
        elif wa.is_generator or wa.right.order <= b:
            out = {self.index[(a, b)]: Fraction(1)}
        else:
            a1, a2 = wa.left.order, wa.right.order
            out = {}
            for k, c in self.bracket(a1, b).items():
                for m, d in self.bracket(k, a2).items():
                    out[m] = out.get(m, ZERO) + c * d
            for k, c in self.bracket(a2, b).items():
                for m, d in self.bracket(k, a1).items():
                    out[m] = out.get(m, ZERO) - c * d
            out = {k: c for k, c in out.items() if c}
        self.cache[key] = out
        return out

    def combo_bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for a, c in u.items():
            for b, d in v.items():
                for k, e in self.bracket(a, b).items():
                    out[k] = out.get(k, ZERO) + c * d * e
        return {k: c for k, c in out.items() if c}


def free_nilpotent(n: int, r: int) -> LieAlgebra:
    """f[n, r] in its Hall basis."""
    norm = _Normalizer(n, r)
    words = norm.words
    brackets = {}
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            terms = norm.bracket(i, j)
            if terms:
                brackets[(i, j)] = terms
    return LieAlgebra(f"f[{n},{r}]", [str(w) for w in words], brackets, {"n": n, "r": r})


def layer_dims(n: int, r: int) -> tuple:
    words = hall_basis(n, r)
    return tuple(sum(1 for w in words if w.weight == k) for k in range(1, r + 1))


def free_model(n: int, r: int) -> ModelAlgebra:
    g = free_nilpotent(n, r)
    return ModelAlgebra(g, Subspace.coordinate(g.dim, range(n)), Subspace.zero(g.dim),
                        "free_nilpotent", {"n": n, "r": r})


def generator_extension(target: LieAlgebra, n: int, r: int, images) -> LinearMap:
    """Extend generator images from f[n, r] to a linear map via the Hall words."""
    words = hall_basis(n, r)
    vecs: list = []
    for w in words:
        if w.is_generator:
            vecs.append(tuple(images[w.gen - 1]))
        else:
            vecs.append(target.bracket(vecs[w.left.order], vecs[w.right.order]))
    return LinearMap.from_images(free_nilpotent(n, r), target, vecs, "hall")


# --- the f[3,3] block model ---------------------------------------------

XYZ = ("x1", "x2", "x3")
F33_LABELS = XYZ + ("y1", "y2", "y3") + B.S_LABELS + ("z1", "z2", "z3")
F33_SIZES = (3, 3, 5, 3)


def f33_bracket(u, v) -> tuple:
    x1, y1, _, _ = B.split(u, F33_SIZES)
    x2, y2, _, _ = B.split(v, F33_SIZES)
    return B.join(B.zeros(3),
                  B.cross(x1, x2),
                  B.sub(B.odot(x1, y2), B.odot(y1, x2)),
                  B.add(B.cross(x1, y2), B.cross(y1, x2)))


def f33_model() -> LieAlgebra:
    return from_bracket("f33", F33_LABELS, f33_bracket)


def f33_hall_iso() -> LinearMap:
    """Identification f[3,3] (Hall basis) -> block model, generators to the x-block."""
    g = f33_model()
    phi = generator_extension(g, 3, 3, [g.unit(i) for i in range(3)])
    phi.name = "f33_hall_iso"
    return phi


def ideal_a() -> Subspace:
    return Subspace.coordinate(14, range(11, 14))


def ideal_b() -> Subspace:
    return Subspace.coordinate(14, range(6, 11))


def carnot_quotients() -> dict:
    """f[3,3] and its quotients by a (z-block) and b (S-block), with p = x-block."""
    f = f33_model()
    a33, _ = quotient(f, ideal_a(), "a33_carnot")
    c33, _ = quotient(f, ideal_b(), "c33_carnot")
    out = {}
    for g in (f, a33, c33):
        out[g.name] = ModelAlgebra(g, Subspace.coordinate(g.dim, range(3)), Subspace.zero(g.dim),
                                   g.name)
    return out


# --- C_{n,3} and the step-two example ------------------------------------

def so_n_pairs(n: int) -> list:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def cn3_carnot(n: int) -> ModelAlgebra:
    """(x, A, u) in R^n + so(n) + R^n with [(x,A,u),(y,B,v)] = (0, y x^t - x y^t, A y - B x)."""
    if n < 2:
        raise ValueError("cn3_carnot needs n >= 2")
    pairs = so_n_pairs(n)
    m = len(pairs)
    sizes = (n, m, n)

    def to_matrix(coords):
        M = [[ZERO] * n for _ in range(n)]
        for c, (i, j) in zip(coords, pairs):
            # A_ij = e_j e_i^t - e_i e_j^t
            M[j][i] += c
            M[i][j] -= c
        return M

    def bracket(u, v):
        x, A, _ = B.split(u, sizes)
        y, Bm, _ = B.split(v, sizes)
        C = B.mat_sub(B.outer(y, x), B.outer(x, y))
        c_coords = tuple(C[j][i] for i, j in pairs)
        w = B.sub(B.mat_vec(to_matrix(A), y), B.mat_vec(to_matrix(Bm), x))
        return B.join(B.zeros(n), c_coords, w)

    labels = ([f"x{i + 1}" for i in range(n)] + [f"A{i + 1}{j + 1}" for i, j in pairs]
              + [f"u{i + 1}" for i in range(n)])
    g = from_bracket(f"c{n}3_carnot", labels, bracket, {"n": n})
    return ModelAlgebra(g, Subspace.coordinate(g.dim, range(n)), Subspace.zero(g.dim),
                        "cn3_carnot", {"n": n})


def quaternionic_step2() -> ModelAlgebra:
    rel = {(0, 1): {4: 1}, (2, 3): {4: 1},
           (0, 2): {5: 1}, (1, 3): {5: -1},   # [X4, X2] = Y2
           (0, 3): {6: 1}, (1, 2): {6: 1}}
    brackets = {k: {i: Fraction(c) for i, c in v.items()} for k, v in rel.items()}
    g = LieAlgebra("quaternionic_step2", ["X1", "X2", "X3", "X4", "Y1", "Y2", "Y3"], brackets)
    return ModelAlgebra(g, Subspace.coordinate(7, range(4)), Subspace.zero(7), "quaternionic_step2")
