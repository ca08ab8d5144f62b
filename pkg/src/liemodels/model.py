"""An algebra bundled with its horizontal and isotropy subspaces."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lie import LieAlgebra, growth_vector, is_subalgebra
from .linalg import Subspace


@dataclass
class ModelAlgebra:
    algebra: LieAlgebra
    p: Subspace
    k: Subspace
    family: str = ""
    params: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)   # named LinearMaps, e.g. the basis families A_x, B_x, C_w

    def __post_init__(self):
        n = self.algebra.dim
        if self.p.ambient != n or self.k.ambient != n:
            raise ValueError("p and k must be subspaces of the algebra")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def growth(self) -> tuple:
        return growth_vector(self.algebra, self.p, self.k)

    def check_invariants(self) -> list:
        """Names of violated structural invariants (empty when all hold)."""
        g = self.algebra
        bad = []
        if not is_subalgebra(g, self.k):
            bad.append("k is not a subalgebra")
        if (self.p & self.k).dim:
            bad.append("p meets k")
        elif self.k.dim and not all(self.p.contains(g.bracket(a, b))
                                    for a in self.k.basis for b in self.p.basis):
            bad.append("[k, p] is not contained in p")
        if not bad:
            g_vec = self.growth()
            if g_vec[-1] != g.dim - self.k.dim:
                bad.append(f"p does not bracket-generate: growth {g_vec}")
        return bad

    def subspaces(self) -> dict:
        return {"p": self.p, "k": self.k}
