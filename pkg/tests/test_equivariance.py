from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from liemodels import blocks as B
from liemodels.equivariance import (NAMED, cayley, commutant, equivariant_bilinear_basis, f3_rep,
                                    f33_rep, graph_f2_projection_symbolic, invariant_ideals_f33,
                                    named_map, predicted_dimension, spans_same_line, standard_rep)
from liemodels.free import f33_bracket, f33_model, ideal_a, ideal_b
from liemodels.linalg import Matrix, Subspace, determinant
from liemodels.lie import is_ideal
from strategies import vectors

REPS = ("R3", "R3bar", "s", "sbar")
REFLECT = [[1, 0, 0], [0, 1, 0], [0, 0, -1]]


@pytest.mark.parametrize("name", REPS)
def test_standard_reps_are_representations(name):
    assert standard_rep(name).check() == []


@pytest.mark.parametrize("map_id", sorted(NAMED))
def test_named_maps_are_unique(map_id):
    L = named_map(map_id)
    basis = equivariant_bilinear_basis(L.V1, L.V2, L.W, "O3")
    assert len(basis) == 1
    assert spans_same_line(basis, L)


def test_cross_product_needs_twist_under_o3():
    assert len(equivariant_bilinear_basis("R3", "R3", "R3", "O3")) == 0
    assert len(equivariant_bilinear_basis("R3", "R3", "R3", "SO3")) == 1


@pytest.mark.parametrize("v1, v2, w", list(product(("R3", "R3bar"), REPS, REPS)))
@pytest.mark.parametrize("group", ["O3", "SO3"])
def test_solver_matches_bookkeeping(v1, v2, w, group):
    assert len(equivariant_bilinear_basis(v1, v2, w, group)) == predicted_dimension(v1, v2, w, group)


ROTATION_SEEDS = [(1, 0, 0), (0, 2, 0), (1, 1, 1), (Fraction(1, 2), -1, 3), (2, 3, -1),
                  (0, 0, Fraction(1, 3)), (-1, 2, 2), (3, 0, 1), (Fraction(2, 5), Fraction(1, 7), 1),
                  (1, -1, 0)]


@pytest.mark.parametrize("seed", ROTATION_SEEDS)
def test_cayley_rotations(seed):
    q = cayley(seed)
    Q = Matrix(q, 3)
    assert Q.T @ Q == Matrix.identity(3) and determinant(Q) == 1
    for map_id in NAMED:
        for L in equivariant_bilinear_basis(*(standard_rep(r) for r in NAMED[map_id][:3])):
            assert L.is_equivariant_at(q)
            # a reflected rotation exercises the determinant twist
            assert L.is_equivariant_at((Q @ Matrix(REFLECT, 3)).entries)


@given(vectors(3), vectors(3))
def test_cross_product_map_values(u, v):
    assert named_map("M1")(u, v) == B.cross(u, v)


def test_f33_bracket_is_equivariant():
    rep = f33_rep()
    g = f33_model()
    for G in list(rep.gens):
        # derivation: G[u, v] = [Gu, v] + [u, Gv]
        for i in range(3):
            for j in range(14):
                u, v = g.unit(i), g.unit(j)
                lhs = G.apply(f33_bracket(u, v))
                rhs = B.add(f33_bracket(G.apply(u), v), f33_bracket(u, G.apply(v)))
                assert lhs == rhs


def test_commutant_of_f3_is_two_dimensional():
    assert len(commutant(f3_rep())) == 2


def test_invariant_ideals():
    search = invariant_ideals_f33()
    assert search.ideals == [Subspace.zero(14), ideal_a(), ideal_b()]
    assert all(is_ideal(f33_model(), I) for I in search.ideals)
    assert search.graph_certificate
    assert all(search.sampled.values())
    top = Subspace.coordinate(14, range(6, 14))
    assert top.is_subspace_of(search.closures["y"])


def test_graph_projection_is_lambda_free():
    proj = graph_f2_projection_symbolic()
    assert all("lam" not in p.variables for p in proj)
    assert any(proj)
