import pytest

from liemodels.free import (carnot_quotients, cn3_carnot, f33_hall_iso, f33_model, free_nilpotent,
                            hall_basis, layer_dims, mobius, quaternionic_step2, witt_dim)
from liemodels.lie import check_map, jacobi_defect


def test_mobius():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@pytest.mark.parametrize("n, r, dims", [(2, 3, (2, 1, 2)), (3, 3, (3, 3, 8)), (2, 4, (2, 1, 2, 3)),
                                        (3, 4, (3, 3, 8, 18)), (4, 2, (4, 6))])
def test_witt_dims(n, r, dims):
    assert tuple(witt_dim(n, k) for k in range(1, r + 1)) == dims


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_hall_counts_match_witt(n, r):
    assert layer_dims(n, r) == tuple(witt_dim(n, k) for k in range(1, r + 1))


@pytest.mark.parametrize("n, r", [(2, 3), (3, 3), (2, 4)])
def test_free_nilpotent_is_lie_and_stratified(n, r):
    g = free_nilpotent(n, r)
    assert jacobi_defect(g).is_zero
    assert g.dim == len(hall_basis(n, r))


def test_f33_block_model_matches_hall():
    assert jacobi_defect(f33_model()).is_zero
    assert check_map(f33_hall_iso(), "isomorphism")


def test_carnot_quotients():
    qs = carnot_quotients()
    assert {name: m.dim for name, m in qs.items()} == {"f33": 14, "a33_carnot": 11, "c33_carnot": 9}
    assert {m.growth() for m in qs.values()} == {(3, 6, 14), (3, 6, 11), (3, 6, 9)}


@pytest.mark.parametrize("n, growth", [(2, (2, 3, 5)), (3, (3, 6, 9)), (4, (4, 10, 14))])
def test_cn3(n, growth):
    m = cn3_carnot(n)
    assert jacobi_defect(m.algebra).is_zero
    assert m.growth() == growth


def test_quaternionic_step2():
    m = quaternionic_step2()
    assert m.dim == 7 and jacobi_defect(m.algebra).is_zero
    assert m.growth() == (4, 7)


def test_cn3_two_is_free():
    from liemodels.free import generator_extension
    target = cn3_carnot(2).algebra
    phi = generator_extension(target, 2, 3, [target.unit(0), target.unit(1)])
    assert check_map(phi, "isomorphism")


def test_quaternionic_relations():
    from liemodels.lie import center
    g = quaternionic_step2().algebra
    assert g.basis_bracket(0, 2) == g.unit(5)          # [X1, X3] = Y2
    assert g.basis_bracket(3, 1) == g.unit(5)          # [X4, X2] = Y2
    assert center(g).dim == 3


@pytest.mark.parametrize("n, r", [(2, 4), (3, 3)])
def test_hall_normalization_is_antisymmetric(n, r):
    g = free_nilpotent(n, r)
    for i in range(g.dim):
        for j in range(g.dim):
            assert g.basis_bracket(i, j) == tuple(-c for c in g.basis_bracket(j, i))
