import pytest
from hypothesis import given

from conftest import elements, scales
from scaledhyper import (
    IDENTITY,
    Hypercomplex,
    Matrix2C,
    NotClosedError,
    NotInRealizationError,
    SingularError,
    adjoint_in_ring,
    det,
    mat_adjoint,
    mat_det,
    mat_inverse,
    mat_mul,
    membership,
    mul,
    realize,
    unrealize,
)
from scaledhyper.realization import max_entry_diff, star_residual


def test_spec_realization_t5():
    assert realize(5, Hypercomplex(1j, 2)) == Matrix2C.from_rows([[1j, 10], [2, -1j]])


def test_unrealize_at_t0_reads_b_from_lower_left():
    x = Hypercomplex(1 + 2j, 3 - 1j)
    assert unrealize(0, realize(0, x)) == x


def test_unrealize_rejects_foreign_matrix():
    with pytest.raises(NotInRealizationError):
        unrealize(2, Matrix2C(1, 2, 3, 4))


def test_identity_in_both_templates():
    for t in (-3.0, 0.0, 0.5, 2.0):
        rep = membership(t, IDENTITY)
        assert rep.in_realization and rep.in_star_set


def test_adjoint_in_ring_t_pm1():
    x = Hypercomplex(1 + 2j, -0.5 + 1j)
    for t in (-1.0, 1.0):
        y = adjoint_in_ring(t, x)
        assert max_entry_diff(realize(t, y), mat_adjoint(realize(t, x))) <= 1e-14


def test_adjoint_not_closed_at_t2():
    with pytest.raises(NotClosedError):
        adjoint_in_ring(2, Hypercomplex(1, 1))
    assert adjoint_in_ring(2, Hypercomplex(1j, 0)) == Hypercomplex(-1j, 0)


@pytest.mark.parametrize("t", [-0.5, 0.0, 0.5, 2.0])
def test_adjoint_witness_fails_off_pm1(t):
    A = mat_adjoint(realize(t, Hypercomplex(0, 1)))
    assert not membership(t, A).in_realization


def test_mat_inverse_singular():
    with pytest.raises(SingularError):
        mat_inverse(Matrix2C(1, 2, 2, 4))


def test_mat_inverse():
    A = Matrix2C(2, 1j, 0, 3)
    assert max_entry_diff(mat_mul(A, mat_inverse(A)), IDENTITY) <= 1e-15


@given(scales, elements, elements)
def test_homomorphism(t, x, y):
    X, Y = realize(t, x), realize(t, y)
    assert max_entry_diff(realize(t, x + y), X + Y) <= 1e-14 * max(1.0, abs(t))
    scale = max(1.0, X.max_abs() * Y.max_abs())
    assert max_entry_diff(realize(t, mul(t, x, y)), X @ Y) <= 1e-12 * scale


@given(scales, elements)
def test_round_trip(t, x):
    assert unrealize(t, realize(t, x)) == x


@given(scales, elements)
def test_det_agrees(t, x):
    d = mat_det(realize(t, x))
    scale = max(1.0, abs(x.a) ** 2 + abs(t) * abs(x.b) ** 2)
    assert abs(d - det(t, x)) <= 1e-12 * scale


@given(scales, elements, elements)
def test_star_set_closed_under_products(t, x, y):
    P = mat_adjoint(realize(t, x)) @ mat_adjoint(realize(t, y))
    assert star_residual(t, P) <= 1e-12 * max(1.0, P.max_abs())
