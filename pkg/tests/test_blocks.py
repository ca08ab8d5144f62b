from hypothesis import given

from liemodels import blocks as B
from strategies import vectors

v3 = vectors(3)


@given(v3, v3)
def test_hat_is_cross(a, b):
    assert B.mat_vec(B.hat(a), b) == B.cross(a, b)
    assert B.vee(B.hat(a)) == a


@given(v3, v3)
def test_hat_bracket(a, b):
    assert B.vee(B.commutator(B.hat(a), B.hat(b))) == B.cross(a, b)


@given(v3, v3)
def test_odot_is_traceless_symmetric(a, b):
    M = B.s_matrix(B.odot(a, b))
    assert B.is_traceless_symmetric(M)
    assert B.odot(a, b) == B.odot(b, a)


def test_s_basis_round_trip():
    for i in range(5):
        e = B.unit(i, 5)
        assert B.s_coords(B.s_matrix(e)) == e
    assert len(B.S_LABELS) == 5


def test_split_join():
    v = tuple(range(11))
    parts = B.split(v, (3, 3, 5))
    assert B.join(*parts) == v
