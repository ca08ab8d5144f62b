import pytest

from liemodels.catalog.classical import (b_algebra, build_classical, g2_compact, g2_split,
                                         g2_split_model, so3_so3, so_block, so_pq, su3)
from liemodels.lie import jacobi_defect, killing_signature


@pytest.mark.parametrize("p, q, sig", [(3, 0, (0, 3, 0)), (4, 0, (0, 6, 0)), (3, 1, (3, 3, 0)),
                                       (2, 1, (2, 1, 0))])
def test_orthogonal_signatures(p, q, sig):
    g = so_pq(p, q).algebra
    assert jacobi_defect(g).is_zero
    assert killing_signature(g) == sig


@pytest.mark.parametrize("n, sign, sig", [(3, 1, (0, 6, 0)), (3, -1, (3, 3, 0)), (4, 1, (0, 10, 0))])
def test_so_block(n, sign, sig):
    m = so_block(n, sign)
    assert killing_signature(m.algebra) == sig


@pytest.mark.parametrize("k, sig", [(1, (0, 6, 0)), (4, (0, 6, 0)), (-1, (3, 3, 0)), (0, (0, 3, 3))])
def test_b_family(k, sig):
    g = b_algebra(k)
    assert jacobi_defect(g).is_zero and killing_signature(g) == sig


def test_so3_so3_and_su3():
    assert killing_signature(so3_so3()) == (0, 6, 0)
    g = su3().algebra
    assert g.dim == 8 and jacobi_defect(g).is_zero and killing_signature(g) == (0, 8, 0)


@pytest.mark.parametrize("build, sig", [(g2_split, (8, 6, 0)), (g2_compact, (0, 14, 0))])
def test_g2_real_forms(build, sig):
    g = build()
    assert g.dim == 14 and jacobi_defect(g).is_zero
    assert killing_signature(g) == sig


def test_split_g2_closes_in_matrix_span():
    from liemodels import blocks as B
    m = g2_split_model()
    g = m.algebra
    for i in range(14):
        for j in range(i + 1, 14):
            C = B.commutator(m.basis[i], m.basis[j])
            assert m.coords(C) == g.basis_bracket(i, j)


def test_build_classical_dispatch():
    assert build_classical("so", p=3, q=1).dim == 6
    assert build_classical("b", k=2).dim == 6
    with pytest.raises(ValueError):
        build_classical("e8")
