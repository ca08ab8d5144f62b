"""Exact dense linear algebra over Q and Q(i).

Matrices over the polynomial ring support arithmetic and substitution only;
``reduce`` and everything built on it rejects them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import MultiPoly
from .scalars import GaussianRational


class UnsupportedRingError(TypeError):
    pass


class DimensionMismatchError(ValueError):
    pass


def _ring_of_entries(entries) -> str:
    ring = "rational"
    for row in entries:
        for x in row:
            if isinstance(x, MultiPoly):
                return "polynomial"
            if isinstance(x, GaussianRational):
                ring = "gaussian"
    return ring


def _norm(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


class Matrix:
    """Immutable rows x cols grid of exact scalars."""

    __slots__ = ("rows", "cols", "entries", "_ring")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        grid = tuple(tuple(_norm(x) for x in row) for row in entries)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise DimensionMismatchError("ragged matrix")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_ring", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def ring(self) -> str:
        if self._ring is None:
            object.__setattr__(self, "_ring", _ring_of_entries(self.entries))
        return self._ring

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls([[] for _ in range(rows or 0)], 0)
        return cls(list(zip(*columns)), len(columns))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else Fraction(0) for j in range(n)]
                    for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    @property
    def T(self) -> "Matrix":
        return Matrix(list(zip(*self.entries)) if self.rows else [], self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)]
                       for r, s in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)]
                       for r, s in zip(self.entries, other.entries)], self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.entries], self.cols)

    def __mul__(self, c) -> "Matrix":
        return Matrix([[a * c for a in r] for r in self.entries], self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.col_list()
        return Matrix([[_dot(r, c) for c in ocols] for r in self.entries], other.cols)

    def col_list(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(_dot(r, v) for r in self.entries)

    def trace(self):
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def map(self, f) -> "Matrix":
        return Matrix([[f(a) for a in r] for r in self.entries], self.cols)

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.entries]})"


def _dot(a: Sequence, b: Sequence):
    total = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            total = total + x * y
    return total


# --- elimination ---------------------------------------------------------

def _check_field(ring: str):
    if ring == "polynomial":
        raise UnsupportedRingError("row reduction needs a field; polynomial entries rejected")


def rref_rows(rows: Sequence[Sequence], ncols: int) -> tuple[list, list]:
    """Reduced row echelon form of a list of rows; returns (rows, pivots)."""
    work = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = 1 / work[r][c]
        pr = [x * inv if x else x for x in work[r]]
        work[r] = pr
        for i in range(len(work)):
            if i != r:
                f = work[i][c]
                if f:
                    row = work[i]
                    for j in range(c, ncols):
                        if pr[j]:
                            row[j] = row[j] - f * pr[j]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], pivots


def kernel_of_rows(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of {v : row . v = 0 for every row}."""
    red, pivots = rref_rows(rows, ncols)
    pivset = set(pivots)
    zero = Fraction(0)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Reduction:
    rank: int
    rref: Matrix
    pivots: tuple
    kernel: tuple   # column vectors spanning ker M
    image: tuple    # pivot columns of M, a basis of im M


def reduce(M: Matrix) -> Reduction:
    """Rank, reduced echelon form, kernel and image bases of ``M`` over a field."""
    _check_field(M.ring)
    red, pivots = rref_rows(M.entries, M.cols)
    rref = Matrix(red + [tuple([Fraction(0)] * M.cols)] * (M.rows - len(red)), M.cols)
    kernel = kernel_of_rows(M.entries, M.cols)
    image = tuple(M.col(c) for c in pivots)
    return Reduction(len(pivots), rref, tuple(pivots), tuple(kernel), image)


def rank(M: Matrix) -> int:
    _check_field(M.ring)
    return len(rref_rows(M.entries, M.cols)[1])


def inverse(M: Matrix) -> Matrix:
    _check_field(M.ring)
    n = M.rows
    if n != M.cols:
        raise DimensionMismatchError("inverse of non-square matrix")
    aug = [list(M.entries[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return Matrix([row[n:] for row in red], n)


def solve(M: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``M x = b``, or None when inconsistent."""
    _check_field(M.ring)
    aug = [list(M.entries[i]) + [b[i]] for i in range(M.rows)]
    red, pivots = rref_rows(aug, M.cols + 1)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for row, pc in zip(red, pivots):
        x[pc] = row[M.cols]
    return tuple(x)


def determinant(M: Matrix):
    _check_field(M.ring)
    n = M.rows
    a = [list(r) for r in M.entries]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det = det * a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                for j in range(c, n):
                    a[i][j] = a[i][j] - f * a[c][j]
    return det


# --- subspaces -----------------------------------------------------------

class Subspace:
    """Subspace of K^n stored as a canonical reduced-echelon basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        vecs = [tuple(_norm(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} in ambient dimension {ambient}")
        if any(isinstance(x, MultiPoly) for v in vecs for x in v):
            raise UnsupportedRingError("subspaces need field entries")
        red, pivots = rref_rows(vecs, ambient)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", tuple(red))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def coordinate(cls, ambient: int, indices: Iterable[int]) -> "Subspace":
        rows = []
        for i in indices:
            v = [Fraction(0)] * ambient
            v[i] = Fraction(1)
            rows.append(v)
        return cls(ambient, rows)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.coordinate(ambient, range(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient)

    def normal_form(self, v: Sequence) -> tuple:
        """Reduce ``v`` modulo this subspace (zero at every pivot column)."""
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            f = w[pc]
            if f:
                for j in range(self.ambient):
                    if row[j]:
                        w[j] = w[j] - f * row[j]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return not any(self.normal_form(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in ``self.basis``; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(v[pc] for pc in self.pivots)

    def index_list(self) -> list | None:
        """Coordinate indices when the subspace is spanned by standard basis vectors."""
        for row, pc in zip(self.basis, self.pivots):
            if any(x for j, x in enumerate(row) if j != pc):
                return None
        return list(self.pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_combine("sum", self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_combine("intersection", self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        idx = self.index_list()
        if idx is not None:
            return f"Subspace(ambient={self.ambient}, coords={idx})"
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"


def subspace_combine(kind: str, U: Subspace, V: Subspace) -> Subspace:
    if U.ambient != V.ambient:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {U.ambient} vs {V.ambient}")
    n = U.ambient
    if kind == "sum":
        return Subspace(n, U.basis + V.basis)
    if kind == "intersection":
        if not U.dim or not V.dim:
            return Subspace.zero(n)
        # columns u_1..u_a, -v_1..-v_b; kernel vectors give common elements
        cols = list(U.basis) + [tuple(-x for x in v) for v in V.basis]
        rows = list(zip(*cols))
        ker = kernel_of_rows(rows, len(cols))
        vecs = []
        for k in ker:
            w = [Fraction(0)] * n
            for coef, u in zip(k[:U.dim], U.basis):
                if coef:
                    w = [a + coef * b for a, b in zip(w, u)]
            vecs.append(w)
        return Subspace(n, vecs)
    raise ValueError(f"unknown subspace combination {kind!r}")


def sym_signature(S: Matrix) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a rational symmetric matrix.

    Diagonalizes by simultaneous row/column operations (congruence), so no
    square roots appear.
    """
    if S.ring != "rational":
        raise UnsupportedRingError("signature needs rational entries")
    if not S.is_symmetric():
        raise ValueError("sym_signature: matrix is not symmetric")
    n = S.rows
    a = [list(r) for r in S.entries]
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if a[i][i]), None)
        if p is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if off is None:
                break
            i, j = off
            # e_i -> e_i + e_j makes the (i, i) entry 2 a_ij
            for c in range(n):
                a[i][c] = a[i][c] + a[j][c]
            for r in range(n):
                a[r][i] = a[r][i] + a[r][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for r in range(n):
                a[r][k], a[r][p] = a[r][p], a[r][k]
        piv = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f:
                for c in range(n):
                    a[i][c] = a[i][c] - f * a[k][c]
                for r in range(n):
                    a[r][i] = a[r][i] - f * a[r][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos, neg, n - pos - neg
