"""Structure-constant Lie algebras and the generic machinery on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    UnsupportedRingError,
    inverse,
    kernel_of_rows,
    rank,
    solve,
    sym_signature,
)
from .poly import MultiPoly
from .scalars import GaussianRational, to_gaussian

ZERO = Fraction(0)


class LieError(ValueError):
    pass


class NotAnIdealError(LieError):
    pass


class NotARepresentationError(LieError):
    pass


class OverlapError(LieError):
    pass


class NotBracketGeneratingError(LieError):
    pass


def _infer_ring(values) -> str:
    ring = "rational"
    for c in values:
        if isinstance(c, MultiPoly):
            return "polynomial"
        if isinstance(c, GaussianRational):
            ring = "gaussian"
    return ring


def _coerce(c, ring: str):
    if isinstance(c, int):
        c = Fraction(c)
    if ring == "gaussian" and not isinstance(c, GaussianRational):
        return to_gaussian(c)
    if ring == "polynomial" and not isinstance(c, MultiPoly):
        return MultiPoly.const(c)
    return c


class LieAlgebra:
    """Finite-dimensional algebra given by antisymmetric structure constants.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to ``{k: c}`` (or a sequence of
    ``(k, c)`` pairs) meaning ``[e_i, e_j] = sum_k c e_k``.  The Jacobi
    identity is not enforced here; see :func:`jacobi_defect`.
    """

    def __init__(self, name: str, labels: Sequence[str],
                 brackets: Mapping, params: Mapping | None = None,
                 ring: str | None = None, flags: Sequence[str] = ()):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.params = dict(params or {})
        self.flags = tuple(flags)
        n = self.dim
        clean: dict = {}
        values = []
        for (i, j), terms in brackets.items():
            if not (0 <= i < j < n):
                raise LieError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < {n}")
            items = terms.items() if isinstance(terms, Mapping) else terms
            acc: dict = {}
            for k, c in items:
                if not 0 <= k < n:
                    raise LieError(f"index {k} out of range in [{i},{j}]")
                acc[k] = acc.get(k, ZERO) + c
            acc = {k: c for k, c in acc.items() if c}
            if acc:
                clean[(i, j)] = acc
                values.extend(acc.values())
        self.ring = ring or _infer_ring(values)
        table = [[() for _ in range(n)] for _ in range(n)]
        self._brackets = {}
        for (i, j), acc in sorted(clean.items()):
            terms = tuple((k, _coerce(acc[k], self.ring)) for k in sorted(acc))
            self._brackets[(i, j)] = terms
            table[i][j] = terms
            table[j][i] = tuple((k, -c) for k, c in terms)
        self._table = table

    @property
    def brackets(self) -> dict:
        return dict(self._brackets)

    def structure(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def zero(self) -> tuple:
        z = _coerce(ZERO, self.ring)
        return (z,) * self.dim

    def unit(self, i: int) -> tuple:
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def basis_bracket(self, i: int, j: int) -> tuple:
        v = [ZERO] * self.dim
        for k, c in self._table[i][j]:
            v[k] = c
        return tuple(v)

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError(
                f"bracket in {self.name}: vectors of length {len(u)}, {len(v)} vs dim {self.dim}")
        out = [ZERO] * self.dim
        nv = [(j, b) for j, b in enumerate(v) if b]
        table = self._table
        for i, a in enumerate(u):
            if not a:
                continue
            row = table[i]
            for j, b in nv:
                terms = row[j]
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def ad(self, u: Sequence) -> Matrix:
        cols = [self.bracket(u, self.unit(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def renamed(self, name: str, params: Mapping | None = None) -> "LieAlgebra":
        return LieAlgebra(name, self.labels, self._brackets,
                          self.params if params is None else params, self.ring, self.flags)

    def with_ring(self, ring: str) -> "LieAlgebra":
        return LieAlgebra(self.name, self.labels, self._brackets, self.params, ring, self.flags)

    def same_structure(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self._brackets == other._brackets

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, ring={self.ring})"


def from_bracket(name: str, labels: Sequence[str], fn: Callable[[tuple, tuple], Sequence],
                 params: Mapping | None = None, ring: str | None = None,
                 flags: Sequence[str] = ()) -> LieAlgebra:
    """Tabulate a bilinear bracket given as a function on coordinate vectors."""
    n = len(labels)
    units = []
    for i in range(n):
        v = [ZERO] * n
        v[i] = Fraction(1)
        units.append(tuple(v))
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = fn(units[i], units[j])
            if len(w) != n:
                raise DimensionMismatchError(f"bracket function returned length {len(w)}")
            terms = {k: c for k, c in enumerate(w) if c}
            if terms:
                brackets[(i, j)] = terms
    return LieAlgebra(name, labels, brackets, params, ring, flags)


def bracket(g: LieAlgebra, u: Sequence, v: Sequence) -> tuple:
    return g.bracket(u, v)


def _combo(g: LieAlgebra, coeffs: Sequence, vectors: Sequence) -> tuple:
    out = [ZERO] * g.dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] = out[k] + c * x
    return tuple(out)


# --- Jacobi --------------------------------------------------------------

@dataclass
class JacobiReport:
    residuals: dict  # (i, j, k) -> residual vector, nonzero entries only

    @property
    def is_zero(self) -> bool:
        return not self.residuals

    @property
    def first(self):
        return next(iter(sorted(self.residuals)), None)

    @property
    def max_abs(self):
        best = ZERO
        for vec in self.residuals.values():
            for x in vec:
                if isinstance(x, Fraction):
                    best = max(best, abs(x))
                elif isinstance(x, GaussianRational):
                    best = max(best, abs(x.re), abs(x.im))
        return best


def _bb(g: LieAlgebra, i: int, j: int, k: int) -> dict:
    """[[e_i, e_j], e_k] as a sparse dict."""
    out: dict = {}
    table = g._table
    for m, c in table[i][j]:
        for n, d in table[m][k]:
            s = out.get(n, ZERO) + c * d
            out[n] = s
    return out


def jacobi_triple(g: LieAlgebra, i: int, j: int, k: int) -> tuple:
    acc: dict = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for n, x in _bb(g, a, b, c).items():
            acc[n] = acc.get(n, ZERO) + x
    out = [ZERO] * g.dim
    for n, x in acc.items():
        out[n] = x
    return tuple(out)


def jacobi_defect(g: LieAlgebra) -> JacobiReport:
    """Jacobi residuals over all basis triples i < j < k."""
    residuals = {}
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = jacobi_triple(g, i, j, k)
                if any(r):
                    residuals[(i, j, k)] = r
    return JacobiReport(residuals)


def jacobi_residual(g: LieAlgebra, u: Sequence, v: Sequence, w: Sequence) -> tuple:
    a = g.bracket(g.bracket(u, v), w)
    b = g.bracket(g.bracket(v, w), u)
    c = g.bracket(g.bracket(w, u), v)
    return tuple(x + y + z for x, y, z in zip(a, b, c))


# --- maps ----------------------------------------------------------------

class LinearMap:
    """Linear map between algebras; ``matrix`` is target.dim x source.dim."""

    def __init__(self, source: LieAlgebra, target: LieAlgebra, matrix: Matrix | Sequence,
                 name: str = ""):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix, source.dim)
        if matrix.cols != source.dim or matrix.rows != target.dim:
            raise DimensionMismatchError(
                f"map matrix {matrix.rows}x{matrix.cols} for {source.name}(dim {source.dim})"
                f" -> {target.name}(dim {target.dim})")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.name = name

    @classmethod
    def from_images(cls, source: LieAlgebra, target: LieAlgebra, images: Sequence[Sequence],
                    name: str = "") -> "LinearMap":
        return cls(source, target, Matrix.from_columns(images, target.dim), name)

    def __call__(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def then(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source, other.target, other.matrix @ self.matrix,
                         f"{other.name}.{self.name}")

    def __repr__(self):
        return f"LinearMap({self.source.name} -> {self.target.name})"


@dataclass
class MapCheck:
    ok: bool
    counterexample: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_map(phi: LinearMap, mode: str = "homomorphism") -> MapCheck:
    g, h = phi.source, phi.target
    images = [phi(g.unit(i)) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = phi(g.basis_bracket(i, j))
            rhs = h.bracket(images[i], images[j])
            if any(a != b for a, b in zip(lhs, rhs)):
                return MapCheck(False, (i, j),
                                f"phi[{g.labels[i]},{g.labels[j]}] != [phi {g.labels[i]}, phi {g.labels[j]}]")
    if mode == "isomorphism":
        if g.dim != h.dim:
            return MapCheck(False, None, f"dimensions differ: {g.dim} vs {h.dim}")
        r = rank(phi.matrix)
        if r != g.dim:
            return MapCheck(False, None, f"rank {r} < {g.dim}")
    elif mode != "homomorphism":
        raise ValueError(f"unknown mode {mode!r}")
    return MapCheck(True)


# --- constructions -------------------------------------------------------

def _merge_labels(a: Sequence[str], b: Sequence[str]) -> tuple:
    seen = set(a)
    out = list(a)
    for lab in b:
        while lab in seen:
            lab = lab + "'"
        seen.add(lab)
        out.append(lab)
    return tuple(out)


def direct_sum(g: LieAlgebra, h: LieAlgebra, name: str | None = None) -> LieAlgebra:
    if g.ring != h.ring:
        raise LieError(f"ring mismatch: {g.ring} vs {h.ring}")
    n = g.dim
    brackets = dict(g.brackets)
    for (i, j), terms in h.brackets.items():
        brackets[(i + n, j + n)] = tuple((k + n, c) for k, c in terms)
    return LieAlgebra(name or f"{g.name}+{h.name}", _merge_labels(g.labels, h.labels),
                      brackets, {**g.params, **h.params}, g.ring)


def semidirect(k_alg: LieAlgebra, module_dim: int, theta: Sequence[Matrix],
               name: str | None = None, module_labels: Sequence[str] | None = None) -> LieAlgebra:
    """``k_alg`` acting on an abelian ideal of dimension ``module_dim`` through ``theta``."""
    if len(theta) != k_alg.dim:
        raise NotARepresentationError(f"need {k_alg.dim} matrices, got {len(theta)}")
    theta = [t if isinstance(t, Matrix) else Matrix(t) for t in theta]
    for t in theta:
        if t.rows != module_dim or t.cols != module_dim:
            raise DimensionMismatchError("theta matrices must be module_dim square")

    def theta_of(v):
        M = Matrix.zeros(module_dim, module_dim)
        for c, t in zip(v, theta):
            if c:
                M = M + t * c
        return M

    for a in range(k_alg.dim):
        for b in range(a + 1, k_alg.dim):
            lhs = theta_of(k_alg.basis_bracket(a, b))
            rhs = theta[a] @ theta[b] - theta[b] @ theta[a]
            if lhs != rhs:
                raise NotARepresentationError(
                    f"theta([{k_alg.labels[a]},{k_alg.labels[b]}]) != [theta {k_alg.labels[a]}, theta {k_alg.labels[b]}]")
    n = k_alg.dim
    brackets = dict(k_alg.brackets)
    for a in range(n):
        for i in range(module_dim):
            terms = {n + j: theta[a][j, i] for j in range(module_dim) if theta[a][j, i]}
            if terms:
                brackets[(a, n + i)] = terms
    labels = _merge_labels(k_alg.labels, module_labels or [f"m{i + 1}" for i in range(module_dim)])
    return LieAlgebra(name or f"{k_alg.name}|x{module_dim}", labels, brackets, k_alg.params)


def bracket_subspaces(g: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    vecs = [g.bracket(u, v) for u in U.basis for v in V.basis]
    return Subspace(g.dim, vecs)


def ideal_violation(g: LieAlgebra, W: Subspace):
    """First (basis index, W-vector) with [e_i, w] outside W, else None."""
    for i in range(g.dim):
        e = g.unit(i)
        for w in W.basis:
            if not W.contains(g.bracket(e, w)):
                return i, w
    return None


def is_ideal(g: LieAlgebra, W: Subspace) -> bool:
    return ideal_violation(g, W) is None


def is_subalgebra(g: LieAlgebra, W: Subspace) -> bool:
    return all(W.contains(g.bracket(a, b)) for a in W.basis for b in W.basis)


def quotient(g: LieAlgebra, W: Subspace, name: str | None = None):
    """Quotient algebra g/W and the projection map."""
    bad = ideal_violation(g, W)
    if bad is not None:
        i, w = bad
        raise NotAnIdealError(f"[{g.labels[i]}, w] leaves the subspace for w = {list(map(str, w))}")
    pivset = set(W.pivots)
    keep = [i for i in range(g.dim) if i not in pivset]
    pos = {i: a for a, i in enumerate(keep)}

    def project(v):
        nf = W.normal_form(v)
        return tuple(nf[i] for i in keep)

    brackets = {}
    for a, i in enumerate(keep):
        for b in range(a + 1, len(keep)):
            j = keep[b]
            w = project(g.basis_bracket(i, j))
            terms = {c: x for c, x in enumerate(w) if x}
            if terms:
                brackets[(a, b)] = terms
    q = LieAlgebra(name or f"{g.name}/W", [g.labels[i] for i in keep], brackets, g.params, g.ring)
    proj = LinearMap.from_images(g, q, [project(g.unit(i)) for i in range(g.dim)], "projection")
    del pos
    return q, proj


def generated_subalgebra(g: LieAlgebra, W: Subspace) -> Subspace:
    """Smallest bracket-closed subspace containing W."""
    current = W
    for _ in range(g.dim + 1):
        new = current + bracket_subspaces(g, current, current)
        if new == current:
            return current
        current = new
    return current


def ideal_closure(g: LieAlgebra, W: Subspace) -> Subspace:
    """Smallest ideal containing W."""
    full = Subspace.full(g.dim)
    current = W
    for _ in range(g.dim + 1):
        new = current + bracket_subspaces(g, full, current)
        if new == current:
            return current
        current = new
    return current


def center(g: LieAlgebra) -> Subspace:
    # v is central iff sum_i v_i [e_i, e_j] = 0 for all j
    rows = []
    for j in range(g.dim):
        cols = [g.basis_bracket(i, j) for i in range(g.dim)]
        for k in range(g.dim):
            rows.append(tuple(c[k] for c in cols))
    return Subspace(g.dim, kernel_of_rows(rows, g.dim))


def series(g: LieAlgebra, kind: str) -> list:
    """Lower central or derived series as a list of Subspaces; center as a one-element list."""
    full = Subspace.full(g.dim)
    if kind == "center":
        return [center(g)]
    if kind not in ("lower_central", "derived"):
        raise ValueError(f"unknown series {kind!r}")
    out = [full]
    while True:
        prev = out[-1]
        nxt = bracket_subspaces(g, full if kind == "lower_central" else prev, prev)
        out.append(nxt)
        if nxt == prev or nxt.dim == 0:
            return out


def series_dims(g: LieAlgebra, kind: str) -> list:
    return [s.dim for s in series(g, kind)]


# --- Killing form --------------------------------------------------------

def killing(g: LieAlgebra):
    """Killing matrix tr(ad e_i ad e_j) and its signature."""
    if g.ring != "rational":
        raise UnsupportedRingError(f"Killing form needs rational constants; {g.name} is {g.ring}")
    n = g.dim
    ads = [g.ad(g.unit(i)).entries for i in range(n)]
    B = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        Ai = ads[i]
        for j in range(i, n):
            Aj = ads[j]
            t = ZERO
            for a in range(n):
                row = Ai[a]
                for b in range(n):
                    x = row[b]
                    if x:
                        y = Aj[b][a]
                        if y:
                            t += x * y
            B[i][j] = B[j][i] = t
    M = Matrix(B, n)
    return M, sym_signature(M)


def killing_signature(g: LieAlgebra) -> tuple:
    return killing(g)[1]


# --- filtrations ---------------------------------------------------------

def _filtration(g: LieAlgebra, p: Subspace, k: Subspace) -> list:
    """[W_1 + k, W_2 + k, ...] until stable (W_{j+1} = W_j + [p, W_j])."""
    if p.ambient != g.dim or k.ambient != g.dim:
        raise DimensionMismatchError("subspaces must live in the algebra")
    if (p & k).dim:
        raise OverlapError("horizontal subspace meets the isotropy subspace")
    if not is_subalgebra(g, k):
        raise LieError("isotropy subspace is not a subalgebra")
    W = p
    levels = [W + k]
    for _ in range(g.dim + 1):
        W2 = W + bracket_subspaces(g, p, W)
        V = W2 + k
        if V == levels[-1]:
            break
        levels.append(V)
        W = W2
    return levels


def growth_vector(g: LieAlgebra, p: Subspace, k: Subspace | None = None) -> tuple:
    """dims of (W_j + k)/k for the bracket filtration generated by p."""
    if k is None:
        k = Subspace.zero(g.dim)
    return tuple(V.dim - k.dim for V in _filtration(g, p, k))


@dataclass
class GradedAlgebra:
    algebra: LieAlgebra
    layer_dims: tuple
    adapted_basis: tuple          # vectors of g spanning the chosen complements
    comparison: dict = field(default_factory=dict)

    def layer_of(self, index: int) -> int:
        total = 0
        for layer, d in enumerate(self.layer_dims, start=1):
            total += d
            if index < total:
                return layer
        raise IndexError(index)

    def is_graded(self) -> bool:
        g = self.algebra
        top = len(self.layer_dims)
        for (i, j), terms in g.brackets.items():
            target = self.layer_of(i) + self.layer_of(j)
            for k, _ in terms:
                if target > top or self.layer_of(k) != target:
                    return False
        return True


def _complement(V_prev: Subspace, V: Subspace) -> list:
    """Basis of a complement of V_prev in V, preferring standard basis vectors."""
    chosen = []
    current = V_prev
    n = V.ambient
    for i in range(n):
        e = tuple(Fraction(int(j == i)) for j in range(n))
        if V.contains(e) and not current.contains(e):
            chosen.append(e)
            current = current + Subspace(n, [e])
    for v in V.basis:
        if not current.contains(v):
            chosen.append(v)
            current = current + Subspace(n, [v])
    return chosen


def associated_graded(g: LieAlgebra, p: Subspace, k: Subspace | None = None,
                      expected: LieAlgebra | None = None, name: str | None = None) -> GradedAlgebra:
    """Nilpotentization of (g, p, k) in an adapted basis.

    The adapted basis takes standard basis vectors wherever possible, so for
    block-aligned models the graded brackets are read off directly.  If
    ``expected`` is given, the structure constants are compared exactly.
    """
    if k is None:
        k = Subspace.zero(g.dim)
    levels = _filtration(g, p, k)
    if levels[-1].dim != g.dim:
        raise NotBracketGeneratingError(
            f"filtration stabilizes at dim {levels[-1].dim} < {g.dim}")
    prev = k
    layers = []
    for V in levels:
        layers.append(_complement(prev, V))
        prev = V
    basis = [v for layer in layers for v in layer]
    layer_dims = tuple(len(layer) for layer in layers)
    offsets = [0]
    for d in layer_dims:
        offsets.append(offsets[-1] + d)
    r = len(layers)
    # coordinates modulo V_{s-1}, read in the layer-s complement
    coord_cache = {}

    def layer_coords(w, s):
        key = s
        if key not in coord_cache:
            base = list(levels[s - 2].basis) if s >= 2 else list(k.basis)
            M = Matrix.from_columns(base + layers[s - 1], g.dim)
            coord_cache[key] = (len(base), M)
        nb, M = coord_cache[key]
        x = solve(M, w)
        if x is None:
            raise LieError("graded bracket left its filtration level")
        return x[nb:]

    brackets = {}
    n = len(basis)
    lay = []
    for s, d in enumerate(layer_dims, start=1):
        lay += [s] * d
    for a in range(n):
        for b in range(a + 1, n):
            s = lay[a] + lay[b]
            if s > r:
                continue
            w = g.bracket(basis[a], basis[b])
            coords = layer_coords(w, s)
            terms = {offsets[s - 1] + t: c for t, c in enumerate(coords) if c}
            if terms:
                brackets[(a, b)] = terms
    labels = []
    for layer in layers:
        for v in layer:
            nz = [i for i, x in enumerate(v) if x]
            labels.append(g.labels[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"v{len(labels) + 1}")
    gr = LieAlgebra(name or f"gr({g.name})", labels, brackets, g.params, g.ring)
    result = GradedAlgebra(gr, layer_dims, tuple(basis))
    if expected is not None:
        result.comparison = compare_structure(gr, expected)
    return result


def compare_structure(a: LieAlgebra, b: LieAlgebra) -> dict:
    """Exact structure-constant comparison in the given bases."""
    if a.dim != b.dim:
        return {"equal": False, "reason": f"dim {a.dim} vs {b.dim}"}
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if a.basis_bracket(i, j) != b.basis_bracket(i, j):
                return {"equal": False, "reason": f"[{a.labels[i]},{a.labels[j]}] differs",
                        "pair": (i, j)}
    return {"equal": True, "reason": ""}


# --- realification and change of basis ----------------------------------

def realify(g: LieAlgebra, name: str | None = None) -> LieAlgebra:
    """Underlying real algebra with basis (e_1..e_n, i e_1..i e_n)."""
    if g.ring != "gaussian":
        raise UnsupportedRingError(f"realify needs a Gaussian algebra, got {g.ring}")
    n = g.dim
    brackets: dict = {}

    def put(a, b, k, c):
        if not c:
            return
        if a == b:
            return
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        d = brackets.setdefault((a, b), {})
        d[k] = d.get(k, ZERO) + sign * c

    for i in range(n):
        for j in range(n):
            if i >= j:
                continue
            for k, c in g.structure(i, j):
                p, q = c.re, c.im
                # [e_i, e_j] = p e_k + q (i e_k)
                put(i, j, k, p)
                put(i, j, n + k, q)
                # [i e_i, i e_j] = -[e_i, e_j]
                put(n + i, n + j, k, -p)
                put(n + i, n + j, n + k, -q)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k, c in g.structure(i, j):
                p, q = c.re, c.im
                # [i e_i, e_j] = i (p e_k + q i e_k) = p (i e_k) - q e_k
                put(n + i, j, n + k, p)
                put(n + i, j, k, -q)
    labels = list(g.labels) + [f"i*{lab}" for lab in g.labels]
    return LieAlgebra(name or f"realify({g.name})", labels, brackets, g.params, "rational")


def change_basis(g: LieAlgebra, T: Matrix, name: str | None = None,
                 labels: Sequence[str] | None = None) -> LieAlgebra:
    """Algebra in the basis given by the columns of T (old coordinates)."""
    if T.rows != g.dim or T.cols != g.dim:
        raise DimensionMismatchError("change of basis must be square of size dim")
    Tinv = inverse(T)
    cols = T.col_list()
    brackets = {}
    for a in range(g.dim):
        for b in range(a + 1, g.dim):
            w = Tinv.apply(g.bracket(cols[a], cols[b]))
            terms = {k: c for k, c in enumerate(w) if c}
            if terms:
                brackets[(a, b)] = terms
    return LieAlgebra(name or g.name, labels or g.labels, brackets, g.params, g.ring)


def span_of(g: LieAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    return Subspace(g.dim, vectors)


def block_subspace(g: LieAlgebra, start: int, size: int) -> Subspace:
    return Subspace.coordinate(g.dim, range(start, start + size))
