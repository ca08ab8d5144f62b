"""Left-invariant horizontal spans inside the two real forms of g2."""

from __future__ import annotations

from dataclasses import dataclass

from .. import blocks as B
from ..lie import LieAlgebra, growth_vector
from ..linalg import Subspace
from .classical import g2_compact, g2_split


@dataclass
class G2Horizontal:
    form: str
    algebra: LieAlgebra
    p: Subspace
    growth: tuple              # dims of W_1 < W_2 < ... until it stabilizes
    generates: bool            # the last W_j is all of g2

    @property
    def step(self) -> int:
        return len(self.growth)


def _split_p() -> list:
    # A_x = [[0, 0, -2x^t], [x, 0, 0], [0, hat x, 0]] is the x-block of the 7x7 model
    return [B.join(e, B.zeros(3), B.zeros(5), B.zeros(3)) for e in B.E]


def _compact_p() -> list:
    # A_x = (0, x + i x): x-block and y-block both equal to x
    return [B.join(B.zeros(5), B.zeros(3), e, e) for e in B.E]


def g2_horizontal(form: str) -> G2Horizontal:
    if form == "split":
        g, vecs = g2_split(), _split_p()
    elif form == "compact":
        g, vecs = g2_compact(), _compact_p()
    else:
        raise ValueError(f"unknown g2 form {form!r}; use split or compact")
    p = Subspace(g.dim, vecs)
    growth = growth_vector(g, p)
    return G2Horizontal(form, g, p, growth, growth[-1] == g.dim)
