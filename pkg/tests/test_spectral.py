import cmath
import math

import numpy as np
import pytest
from hypothesis import given

from conftest import elements, negative_scales, scales
from scaledhyper import (
    BadScaleError,
    Hypercomplex,
    Matrix2C,
    RealPoly,
    SpectralClass,
    SpectralValue,
    ZeroBError,
    char_poly,
    classify_spectral,
    conjugator,
    mat_det,
    mat_mul,
    poly_eval_matrix,
    radicand,
    realize,
    similarity_residual,
    spectral_form,
    spectral_mapping,
    spectral_related,
    spectralize,
    spectrum,
)
from scaledhyper.realization import max_entry_diff


def test_quaternion_example():
    s = spectralize(-1, Hypercomplex(1 + 3j, -1 + 1j))
    assert s.x == 1 and s.R == 11
    assert abs(s.value() - complex(1, 3.3166247903554)) <= 1e-12
    assert classify_spectral(-1, Hypercomplex(1 + 3j, -1 + 1j)) is SpectralClass.PLUS


def test_general_scale_radicand():
    x = Hypercomplex(1 + 3j, -1 + 1j)
    for t in (-2, -1, 0, 1, 2):
        assert radicand(t, x) == 9 - 2 * t


def test_bicomplex_example_spectral_form():
    S = spectral_form(1, Hypercomplex(-2 - 1j, 1 + 3j))
    assert max_entry_diff(S, Matrix2C.diag(-5, 1)) <= 1e-12


def test_t4_real_pair():
    w, wc = spectrum(4, Hypercomplex(1j, 1))
    assert abs(w + math.sqrt(3)) <= 1e-12 and abs(wc - math.sqrt(3)) <= 1e-12
    assert classify_spectral(4, Hypercomplex(1j, 1)) is SpectralClass.MINUS_ZERO


def test_double_root():
    assert spectrum(0, Hypercomplex(3, 9)) == (3, 3)


def test_b_zero_spectral_value_is_a():
    for a in (2 - 3j, 2 + 3j, -1, 4j):
        assert spectralize(0.5, Hypercomplex(a, 0)).value() == a


def test_char_poly():
    assert char_poly(2, Hypercomplex(1 + 1j, 1)) == (0.0, -2.0)


def test_spectral_value_json():
    d = SpectralValue(1.0, -4.0).to_json()
    assert d == {"x": 1.0, "R": -4.0, "value": [-1.0, 0.0], "conjugate": [3.0, 0.0]}


def test_spectral_related_compares_data_not_values():
    # R = 4 gives 0+2i; different x breaks the relation
    assert spectral_related(-1, Hypercomplex(1j, 3**0.5), Hypercomplex(-1j, 3**0.5))
    assert not spectral_related(-1, Hypercomplex(1j, 1), Hypercomplex(1 + 1j, 1))


def test_conjugator_quaternion_example():
    Q = conjugator(-1, Hypercomplex(1j, 1))
    expected = realize(-1, Hypercomplex(1, 1j * (math.sqrt(2) - 1)))
    assert max_entry_diff(Q, expected) <= 1e-15


def test_conjugator_domain():
    with pytest.raises(BadScaleError):
        conjugator(1, Hypercomplex(1, 1))
    with pytest.raises(ZeroBError):
        conjugator(-1, Hypercomplex(1, 0))
    with pytest.raises(BadScaleError):
        similarity_residual(0.5, Hypercomplex(1, 1))


def test_spectral_mapping_example():
    g = RealPoly([0, 0, 1])
    p, q = spectral_mapping(-1, g, Hypercomplex(1 + 3j, -1 + 1j))
    r = 2 * math.sqrt(11)
    assert abs(p - complex(-10, r)) <= 1e-12 and abs(q - complex(-10, -r)) <= 1e-12


def test_real_poly_horner():
    g = RealPoly([1, -2, 3])
    assert g(2) == 9
    assert g.degree == 2
    M = Matrix2C(1, 2, 3, 4)
    G = poly_eval_matrix(g, M)
    ref = np.eye(2) - 2 * M.to_numpy() + 3 * M.to_numpy() @ M.to_numpy()
    assert np.allclose(G.to_numpy(), ref)


def _oracle(T):
    tr, dt = T.m11 + T.m22, mat_det(T)
    s = cmath.sqrt(tr * tr - 4 * dt)
    return (tr + s) / 2, (tr - s) / 2


@given(scales, elements)
def test_roots_match_quadratic_oracle(t, x):
    c0, c1 = char_poly(t, x)
    got = spectrum(t, x)
    ref = _oracle(realize(t, x))
    gap = min(
        max(abs(got[0] - ref[0]), abs(got[1] - ref[1])),
        max(abs(got[0] - ref[1]), abs(got[1] - ref[0])),
    )
    # the oracle loses half the digits near a double root, |R| ~ 0
    scale = 1 + abs(c0) + abs(c1)
    slack = 1e-7 * scale if abs(radicand(t, x)) < 1e-6 * scale else 0.0
    assert gap <= 1e-9 * scale + slack


@given(negative_scales, elements)
def test_similarity_for_negative_scales(t, h):
    assert similarity_residual(t, h) <= 1e-9
    if h.b != 0:
        Q = conjugator(t, h)
        assert mat_det(Q).real >= 1.0
        lhs, rhs = mat_mul(Q, spectral_form(t, h)), mat_mul(realize(t, h), Q)
        scale = max(1.0, Q.max_abs() * max(realize(t, h).max_abs(), spectral_form(t, h).max_abs()))
        assert max_entry_diff(lhs, rhs) <= 1e-10 * scale


@given(scales, elements)
def test_spectral_mapping_property(t, x):
    g = RealPoly([0.5, -1.0, 0.25, 0.1])
    G = poly_eval_matrix(g, realize(t, x))
    p, q = spectral_mapping(t, g, x)
    m = max(1.0, abs(p), abs(q), G.max_abs())
    assert abs((G.m11 + G.m22) - (p + q)) <= 1e-8 * m
    assert abs(mat_det(G) - p * q) <= 1e-8 * m * m


def test_similarity_residual_examples():
    assert similarity_residual(-1, Hypercomplex(1j, 1)) <= 1e-12
    assert similarity_residual(-3, Hypercomplex(2 + 1j, 1 - 1j)) <= 1e-9
    assert similarity_residual(-5, Hypercomplex(7, 0)) == 0


def test_similarity_residual_tiny_b_below_real_axis():
    # Q itself has entries ~1e8 here; the balanced form keeps the residual small
    h = Hypercomplex(0.3 - 2j, 1e-8)
    assert similarity_residual(-0.5, h) <= 1e-9
    Q = conjugator(-0.5, h)
    assert mat_det(Q).real >= 1.0


def test_intertwining_example():
    h = Hypercomplex(1j, 1)
    Q = conjugator(-1, h)
    assert max_entry_diff(mat_mul(Q, spectral_form(-1, h)), mat_mul(realize(-1, h), Q)) <= 1e-12
