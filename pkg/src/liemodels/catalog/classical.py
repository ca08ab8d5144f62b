"""Matrix models: so(p,q), so(n, C), the algebras b_k, su(3) and the two g2 forms."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .. import blocks as B
from ..lie import LieAlgebra, LieError, from_bracket
from ..linalg import Matrix, inverse, rref_rows
from ..poly import MultiPoly
from ..scalars import GaussianRational, I

ZERO = Fraction(0)
ONE = Fraction(1)


class ModelEscapeError(LieError):
    """A commutator left the span of a matrix model (transcription error in the model)."""


def _flat(M) -> list:
    return [x for row in M for x in row]


def _real(x):
    if isinstance(x, GaussianRational):
        if x.im:
            raise ModelEscapeError(f"non-real coordinate {x}")
        return x.re
    return x


class MatrixModel:
    """A Lie algebra realized as the span of given square matrices.

    Brackets are matrix commutators solved back to coordinates.  With
    ``real=True`` the basis may have Gaussian entries but coefficients are
    required to be rational (the real span of the basis).
    """

    def __init__(self, name: str, labels: Sequence[str], basis: Sequence, real: bool = True,
                 params: dict | None = None):
        self.name = name
        self.basis = [[list(r) for r in M] for M in basis]
        self.size = len(self.basis[0])
        self.real = real
        flat = [_flat(M) for M in self.basis]
        N = self.size * self.size
        _, pivots = rref_rows(flat, N)
        if len(pivots) != len(flat):
            raise LieError(f"{name}: basis matrices are linearly dependent")
        self._pivots = pivots
        sub = Matrix([[row[p] for p in pivots] for row in flat], len(pivots))
        self._sub_inv = inverse(sub)   # coords = M[pivots] . sub^{-1}
        n = len(self.basis)
        brackets = {}
        for i in range(n):
            for j in range(i + 1, n):
                C = B.commutator(self.basis[i], self.basis[j])
                try:
                    coords = self.coords(C)
                except ModelEscapeError as exc:
                    raise ModelEscapeError(
                        f"{name}: [{labels[i]}, {labels[j]}] leaves the span ({exc})") from None
                terms = {k: c for k, c in enumerate(coords) if c}
                if terms:
                    brackets[(i, j)] = terms
        ring = "rational" if real else None
        self.algebra = LieAlgebra(name, labels, brackets, params, ring)

    def coords(self, M) -> tuple:
        f = _flat(M)
        picked = [f[p] for p in self._pivots]
        n = len(picked)
        coords = []
        for j in range(n):
            s = ZERO
            for i in range(n):
                a = picked[i]
                if a:
                    b = self._sub_inv[i, j]
                    if b:
                        s = s + a * b
            coords.append(s)
        if self.matrix(coords) != [list(r) for r in M]:
            raise ModelEscapeError("matrix is not in the span of the model basis")
        if self.real:
            coords = [_real(c) for c in coords]
        return tuple(coords)

    def matrix(self, coords: Sequence) -> list:
        n = self.size
        out = [[ZERO] * n for _ in range(n)]
        for c, M in zip(coords, self.basis):
            if c:
                for a in range(n):
                    row = M[a]
                    for b in range(n):
                        if row[b]:
                            out[a][b] = out[a][b] + c * row[b]
        return out

    def map_from(self, source: LieAlgebra, fn: Callable[[tuple], list]) -> list:
        """Images (as coordinate vectors) of the source basis under a matrix-valued map."""
        return [self.coords(fn(source.unit(i))) for i in range(source.dim)]


# --- orthogonal algebras -------------------------------------------------

def so_pq(p: int, q: int = 0) -> MatrixModel:
    """so(p, q) spanned by J A_ij with J = diag(1_p, -1_q)."""
    n = p + q
    if n < 2 or n > 6:
        raise ValueError("so(p, q) supported for 2 <= p + q <= 6")
    basis, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            A = B.antisym(i, j, n)
            for r in range(p, n):
                A[r] = [-x for x in A[r]]
            basis.append(A)
            labels.append(f"L{i + 1}{j + 1}")
    name = f"so({p})" if q == 0 else f"so({p},{q})"
    return MatrixModel(name, labels, basis, params={"p": p, "q": q})


def block_form(n: int, sign: int, a_part, b: Sequence) -> list:
    """[[A, b], [-sign b^t, 0]]: sign +1 gives so(n+1), sign -1 gives so(n,1)."""
    M = [[ZERO] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            M[i][j] = a_part[i][j]
        M[i][n] = b[i]
        M[n][i] = -sign * b[i]
    return M


def so_block(n: int, sign: int) -> MatrixModel:
    """so(n+1) (sign +1) or so(n,1) (sign -1) in block coordinates (A, b).

    For n = 3 the A-part uses hat(e_1), hat(e_2), hat(e_3), so coordinates
    are ``(star A, b)``; otherwise the A_ij, i < j.
    """
    basis, labels = [], []
    zero_b = [ZERO] * n
    if n == 3:
        for i, e in enumerate(B.E):
            basis.append(block_form(3, sign, B.hat(e), zero_b))
            labels.append(f"w{i + 1}")
    else:
        for i in range(n):
            for j in range(i + 1, n):
                basis.append(block_form(n, sign, B.antisym(i, j, n), zero_b))
                labels.append(f"A{i + 1}{j + 1}")
    for i in range(n):
        basis.append(block_form(n, sign, B.mzero(n), B.unit(i, n)))
        labels.append(f"b{i + 1}")
    name = f"so({n + 1})" if sign > 0 else f"so({n},1)"
    return MatrixModel(name, labels, basis, params={"n": n, "sign": sign})


def so_complex(n: int) -> LieAlgebra:
    """so(n) with Gaussian scalars (complex span of the A_ij)."""
    real = so_pq(n).algebra
    return LieAlgebra(f"so({n},C)", real.labels, real.brackets, {"n": n}, "gaussian")


def so3() -> LieAlgebra:
    return from_bracket("so(3)", ["w1", "w2", "w3"], B.cross)


def so3_so3() -> LieAlgebra:
    from ..lie import direct_sum
    return direct_sum(so3(), so3(), "so(3)+so(3)")


def b_algebra(k) -> LieAlgebra:
    """b_k: [(x1,y1),(x2,y2)] = (x1 x y2 + y1 x x2, k x1 x x2 + y1 x y2)."""
    k = k if isinstance(k, MultiPoly) else Fraction(k)

    def bracket(u, v):
        x1, y1 = u[:3], u[3:]
        x2, y2 = v[:3], v[3:]
        return B.join(B.add(B.cross(x1, y2), B.cross(y1, x2)),
                      B.add(B.scale(k, B.cross(x1, x2)), B.cross(y1, y2)))

    return from_bracket(f"b({k})", ["x1", "x2", "x3", "y1", "y2", "y3"], bracket, {"k": k})


# --- su(3) and g2 --------------------------------------------------------

def su3() -> MatrixModel:
    """su(3) as the real span of hat(e_j) and i S for S in the s-basis."""
    basis = [[[x * I for x in row] for row in S] for S in B.S_BASIS]
    basis += [[[GaussianRational(x) for x in row] for row in B.hat(e)] for e in B.E]
    labels = [f"i{s}" for s in B.S_LABELS] + ["w1", "w2", "w3"]
    return MatrixModel("su(3)", labels, basis)


G2_LABELS = ("x1", "x2", "x3", "y1", "y2", "y3") + B.S_LABELS + ("w1", "w2", "w3")
G2C_LABELS = tuple(f"S:{s}" for s in B.S_LABELS) + ("w1", "w2", "w3", "x1", "x2", "x3",
                                                     "y1", "y2", "y3")


def g2_split_matrix(x, y, S, w) -> list:
    """[[0, -2y^t, -2x^t], [x, S + hat w, hat y], [y, hat x, -S + hat w]]."""
    Sm = B.s_matrix(S)
    hw, hx, hy = B.hat(w), B.hat(x), B.hat(y)
    M = [[ZERO] * 7 for _ in range(7)]
    for i in range(3):
        M[0][1 + i] = -2 * y[i]
        M[0][4 + i] = -2 * x[i]
        M[1 + i][0] = x[i]
        M[4 + i][0] = y[i]
        for j in range(3):
            M[1 + i][1 + j] = Sm[i][j] + hw[i][j]
            M[1 + i][4 + j] = hy[i][j]
            M[4 + i][1 + j] = hx[i][j]
            M[4 + i][4 + j] = -Sm[i][j] + hw[i][j]
    return M


def g2_split_model() -> MatrixModel:
    basis = []
    for i in range(14):
        v = B.unit(i, 14)
        x, y, S, w = B.split(v, (3, 3, 5, 3))
        basis.append(g2_split_matrix(x, y, S, w))
    return MatrixModel("g2_split", G2_LABELS, basis)


def g2_split() -> LieAlgebra:
    return g2_split_model().algebra


def _cvec(x, y) -> tuple:
    """y + i x as a complex 3-vector."""
    return tuple(GaussianRational(b, a) for a, b in zip(x, y))


def _conj(v):
    return tuple(z.conjugate() for z in v)


def _su3_to_coords(M) -> tuple:
    """(S, w) with M = i S + hat(w); raises if M is not in su(3)."""
    re = [[z.re for z in row] for row in M]
    im = [[z.im for z in row] for row in M]
    if not B.is_traceless_symmetric(im):
        raise ModelEscapeError("imaginary part is not traceless symmetric")
    if any(re[i][j] != -re[j][i] for i in range(3) for j in range(3)):
        raise ModelEscapeError("real part is not antisymmetric")
    return B.s_coords(im) + B.vee(re)


def g2_compact_bracket(u, v) -> tuple:
    """Bracket on (i S + hat w, y + i x) in real coordinates (S, w, x, y)."""
    S1, w1, x1, y1 = B.split(u, (5, 3, 3, 3))
    S2, w2, x2, y2 = B.split(v, (5, 3, 3, 3))
    A1 = [[GaussianRational(a, b) for a, b in zip(ra, rb)]
          for ra, rb in zip(B.hat(w1), B.s_matrix(S1))]
    A2 = [[GaussianRational(a, b) for a, b in zip(ra, rb)]
          for ra, rb in zip(B.hat(w2), B.s_matrix(S2))]
    v1, v2 = _cvec(x1, y1), _cvec(x2, y2)
    top = B.commutator(A1, A2)
    t = 2 * I * (B.dot(x1, y2) - B.dot(y1, x2))
    o21 = B.outer(v2, _conj(v1))
    o12 = B.outer(v1, _conj(v2))
    for i in range(3):
        for j in range(3):
            top[i][j] = top[i][j] + 3 * o21[i][j] - 3 * o12[i][j]
        top[i][i] = top[i][i] + t
    bottom = B.add(B.sub(B.mat_vec(A1, v2), B.mat_vec(A2, v1)),
                   B.scale(2, B.cross(_conj(v1), _conj(v2))))
    Sw = _su3_to_coords(top)
    xs = tuple(z.im for z in bottom)
    ys = tuple(z.re for z in bottom)
    return Sw + xs + ys


def g2_compact() -> LieAlgebra:
    return from_bracket("g2_compact", G2C_LABELS, g2_compact_bracket)


def g2c_coords(S, w, x, y) -> tuple:
    return tuple(S) + tuple(w) + tuple(x) + tuple(y)


CLASSICAL = ("so", "so_complex", "b", "g2_split", "g2_compact", "su3", "so_block")


def build_classical(name: str, **params) -> LieAlgebra:
    """Named classical algebra; see ``CLASSICAL`` for the accepted names."""
    if name == "so":
        return so_pq(int(params.get("p", 3)), int(params.get("q", 0))).algebra
    if name == "so_block":
        return so_block(int(params.get("n", 3)), int(params.get("sign", 1))).algebra
    if name == "so_complex":
        return so_complex(int(params.get("n", 3)))
    if name == "b":
        return b_algebra(Fraction(params.get("k", 1)))
    if name == "g2_split":
        return g2_split()
    if name == "g2_compact":
        return g2_compact()
    if name == "su3":
        return su3().algebra
    raise ValueError(f"unknown classical algebra {name!r}; choose from {CLASSICAL}")
