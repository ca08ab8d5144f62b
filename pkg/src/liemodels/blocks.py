"""Block-level operations on R^3 and on traceless symmetric 3x3 matrices.

Conventions used everywhere in the package:

* ``hat(v)`` is the antisymmetric matrix with ``hat(v) @ x == cross(v, x)``;
  ``vee`` inverts it.  With ``A_ij = e_j e_i^t - e_i e_j^t`` this gives
  ``vee(A_12) = e3``, ``vee(A_23) = e1``, ``vee(A_31) = e2``.
* The traceless symmetric block ``s`` has the ordered basis
  ``(S12, S23, S13, D1-D2, D2-D3)`` with ``S_ij = e_j e_i^t + e_i e_j^t``
  and ``D_j = e_j e_j^t``.

All helpers are ring-agnostic: entries may be Fractions, Gaussian rationals
or polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

S_LABELS = ("S12", "S23", "S13", "D1-D2", "D2-D3")


def vec(*xs) -> tuple:
    return tuple(Fraction(x) if isinstance(x, int) else x for x in xs)


def unit(i: int, n: int = 3) -> tuple:
    return tuple(ONE if j == i else ZERO for j in range(n))


E = (unit(0), unit(1), unit(2))


def add(*vs: Sequence) -> tuple:
    return tuple(sum(xs, ZERO) for xs in zip(*vs))


def sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def neg(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def dot(a: Sequence, b: Sequence):
    total = ZERO
    for x, y in zip(a, b):
        total = total + x * y
    return total


def cross(a: Sequence, b: Sequence) -> tuple:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


# --- 3x3 matrices as tuples of rows -------------------------------------

def mzero(n: int = 3) -> list:
    return [[ZERO] * n for _ in range(n)]


def mat_mul(A, B) -> list:
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = ZERO
            for k in range(m):
                a = A[i][k]
                if a:
                    b = B[k][j]
                    if b:
                        s = s + a * b
            row.append(s)
        out.append(row)
    return out


def mat_add(A, B) -> list:
    return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]


def mat_sub(A, B) -> list:
    return [[a - b for a, b in zip(r, s)] for r, s in zip(A, B)]


def mat_scale(c, A) -> list:
    return [[c * a for a in r] for r in A]


def mat_vec(A, v) -> tuple:
    return tuple(dot(r, v) for r in A)


def transpose(A) -> list:
    return [list(r) for r in zip(*A)]


def commutator(A, B) -> list:
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def outer(a: Sequence, b: Sequence) -> list:
    """The matrix ``a b^t``."""
    return [[x * y for y in b] for x in a]


def identity3() -> list:
    return [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]


def hat(v: Sequence) -> list:
    x, y, z = v
    return [[ZERO, -z, y],
            [z, ZERO, -x],
            [-y, x, ZERO]]


def vee(A) -> tuple:
    return (A[2][1], A[0][2], A[1][0])


def antisym(i: int, j: int, n: int = 3) -> list:
    """``A_ij = e_j e_i^t - e_i e_j^t`` (0-based indices)."""
    M = mzero(n)
    M[j][i] = ONE
    M[i][j] = -ONE
    return M


def symm(i: int, j: int, n: int = 3) -> list:
    """``S_ij = e_j e_i^t + e_i e_j^t`` (0-based indices, i != j)."""
    M = mzero(n)
    M[j][i] = ONE
    M[i][j] = ONE
    return M


def diag_unit(j: int, n: int = 3) -> list:
    M = mzero(n)
    M[j][j] = ONE
    return M


S_BASIS = (
    symm(0, 1),
    symm(1, 2),
    symm(0, 2),
    mat_sub(diag_unit(0), diag_unit(1)),
    mat_sub(diag_unit(1), diag_unit(2)),
)


def s_matrix(c: Sequence) -> list:
    """Traceless symmetric matrix with s-coordinates ``c``."""
    a, b, s13, d, e = c
    return [[d, a, s13],
            [a, e - d, b],
            [s13, b, -e]]


def s_coords(M) -> tuple:
    """s-coordinates of a traceless symmetric matrix (not validated)."""
    return (M[0][1], M[1][2], M[0][2], M[0][0], -M[2][2])


def is_traceless_symmetric(M) -> bool:
    return (M[0][1] == M[1][0] and M[1][2] == M[2][1] and M[0][2] == M[2][0]
            and not (M[0][0] + M[1][1] + M[2][2]))


def odot(x: Sequence, y: Sequence) -> tuple:
    """s-coordinates of ``1/2 (y x^t + x y^t) - <x, y>/3 I``."""
    sym = mat_scale(HALF, mat_add(outer(y, x), outer(x, y)))
    tr = dot(x, y) * THIRD
    for i in range(3):
        sym[i][i] = sym[i][i] - tr
    return s_coords(sym)


def s_apply(S: Sequence, x: Sequence) -> tuple:
    """``S x`` for S given in s-coordinates."""
    return mat_vec(s_matrix(S), x)


def star_bracket(S1: Sequence, S2: Sequence) -> tuple:
    """``star [S1, S2]``: the vector of the antisymmetric commutator."""
    return vee(commutator(s_matrix(S1), s_matrix(S2)))


def rot_s(v: Sequence, S: Sequence) -> tuple:
    """s-coordinates of ``[star^{-1} v, S]``."""
    return s_coords(commutator(hat(v), s_matrix(S)))


def s_rot(S: Sequence, v: Sequence) -> tuple:
    """s-coordinates of ``[S, star^{-1} v]``."""
    return neg(rot_s(v, S))


def split(u: Sequence, sizes: Sequence[int]) -> list:
    out, i = [], 0
    for n in sizes:
        out.append(tuple(u[i:i + n]))
        i += n
    return out


def join(*parts: Sequence) -> tuple:
    out: list = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def zeros(n: int) -> tuple:
    return (ZERO,) * n
