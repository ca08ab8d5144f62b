from fractions import Fraction

import pytest

from liemodels.catalog.tables import (CASES, build_table, discriminant, expected_growth, kappas,
                                      roots_k, table_cases, zeta)
from liemodels.catalog.classical import so3
from liemodels.lie import LinearMap, check_map, jacobi_defect
from liemodels.linalg import rank
from liemodels.scalars import GaussianRational, UnsupportedParameterError

ROWS = table_cases()


@pytest.mark.parametrize("table, case", [r for r in ROWS if r[0] in (1, 2)])
def test_tables_1_2(table, case):
    m = build_table(table, case)
    assert jacobi_defect(m.algebra).is_zero
    assert m.growth() == (3, 6, 9) == expected_growth(table)
    assert m.check_invariants() == []


@pytest.mark.parametrize("case", [c for t, c in ROWS if t == 3])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_table_3(case, n):
    m = build_table(3, case, n=n)
    assert jacobi_defect(m.algebra).is_zero
    assert m.growth() == expected_growth(3, n) == (n, n * (n + 1) // 2, n * (n + 3) // 2)


@pytest.mark.parametrize("table, case", ROWS)
def test_horizontal_and_isotropy_maps(table, case):
    m = build_table(table, case)
    for phi in m.maps.values():
        assert rank(phi.matrix) == phi.source.dim
    if "C" in m.maps:
        C = m.maps["C"]                     # w -> C_w, read as a map out of so(3)
        assert check_map(LinearMap(so3(), C.target, C.matrix))
    assert m.p.dim == 3


def test_table_3_at_n5():
    assert build_table(3, "a2_pos", n=5).growth() == (5, 15, 20)


@pytest.mark.parametrize("table, case, params", [
    (1, "a2_pos", {"a1": 2, "a2": 1}),          # sqrt(8)
    (1, "a2_neg_a1_pos", {"a1": 3, "a2": -1}),  # sqrt(5)
    (3, "exceptional", {"a1": 1, "a2": Fraction(-1, 4)}),   # sqrt(1/2)
])
def test_irrational_radicals_rejected(table, case, params):
    with pytest.raises(UnsupportedParameterError, match="sqrt"):
        build_table(table, case, params)


@pytest.mark.parametrize("table, case, params", [
    (1, "a2_pos", {"a1": 5, "a2": -4}),
    (2, "complex", {"a1": 5, "a2": -4}),
    (1, "exceptional", {"a1": 2, "a2": 1}),
])
def test_off_locus_rejected(table, case, params):
    with pytest.raises(UnsupportedParameterError):
        build_table(table, case, params)


def test_unknown_case():
    with pytest.raises(ValueError):
        build_table(4, "a2_pos")


def test_parameter_helpers():
    assert discriminant(5, -4) == 9
    assert sorted(roots_k(5, -4)) == [1, 4]
    assert sorted(kappas(3, 4)) == [1, 2]
    assert zeta(0, -4) == GaussianRational(1, 1)
    assert all(len(v) == 2 for v in CASES.values())
