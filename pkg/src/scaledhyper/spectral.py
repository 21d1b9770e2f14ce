"""Spectra, spectral values and spectral forms of realizations.

For ``x = (a, b)`` with ``a = p + q i`` the realization has characteristic
polynomial ``z^2 - 2p z + det``. Its roots are ``p +- i sqrt(R)`` with the
real radicand ``R = q^2 - t|b|^2``. When ``R < 0`` the "conjugate" of the
principal value is understood symbolically: the pair becomes the two real
roots ``p - sqrt|R|`` and ``p + sqrt|R|``.

:class:`SpectralValue` keeps ``(x, R)`` rather than an evaluated complex
number, so the symbolic conjugate is a total function of the sign of ``R``
and no complex square root (with its branch cut) is ever taken.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BadScaleError, ZeroBError
from .realization import (
    Matrix2C,
    IDENTITY,
    mat_inverse,
    mat_mul,
    max_entry_diff,
    realize,
)
from .ring import DEFAULT_TOL, Hypercomplex, abs2, det


@dataclass(frozen=True)
class SpectralValue:
    """A spectral value ``x + i sqrt(R)`` stored as its real data.

    ``branch`` is +1 for the principal value. It is -1 only for ``(a, 0)``
    with ``Im(a) < 0``, where the spectral value is ``a`` itself, and for the
    symbolic conjugate of a principal value.
    """

    x: float
    R: float
    branch: int = 1

    def value(self) -> complex:
        if self.R >= 0:
            return complex(self.x, self.branch * math.sqrt(self.R))
        return complex(self.x - self.branch * math.sqrt(-self.R), 0.0)

    def symbolic_conjugate(self) -> SpectralValue:
        return SpectralValue(self.x, self.R, -self.branch)

    def is_real(self, tol: float = DEFAULT_TOL) -> bool:
        return self.R <= tol * max(1.0, abs(self.R))

    def to_json(self) -> dict:
        w = self.value()
        c = self.symbolic_conjugate().value()
        return {
            "x": self.x,
            "R": self.R,
            "value": [w.real, w.imag],
            "conjugate": [c.real, c.imag],
        }


class SpectralClass(enum.Enum):
    PLUS = "Plus"
    MINUS_ZERO = "MinusZero"

    def __str__(self):
        return self.value


def char_poly(t: float, x: Hypercomplex) -> tuple[float, float]:
    """Coefficients ``(c0, c1)`` of ``z^2 + c1 z + c0``."""
    return det(t, x), -2.0 * x.a.real


def radicand(t: float, x: Hypercomplex) -> float:
    q = x.a.imag
    return q * q - t * abs2(x.b)


def spectralize(t: float, x: Hypercomplex) -> SpectralValue:
    """Principal spectral value. For ``b = 0`` its value is exactly ``a``."""
    if x.b == 0:
        q = x.a.imag
        return SpectralValue(x.a.real, q * q, -1 if q < 0 else 1)
    return SpectralValue(x.a.real, radicand(t, x), 1)


def spectrum(t: float, x: Hypercomplex) -> tuple[complex, complex]:
    """The two eigenvalues of ``realize(t, x)``, principal value first."""
    s = spectralize(t, x)
    return s.value(), s.symbolic_conjugate().value()


def spectral_form(t: float, x: Hypercomplex) -> Matrix2C:
    w, wbar = spectrum(t, x)
    return Matrix2C.diag(w, wbar)


def _radicand_scale(t: float, x: Hypercomplex) -> float:
    return max(1.0, x.a.imag ** 2, abs(t) * abs2(x.b))


def classify_spectral(t: float, x: Hypercomplex, tol: float = DEFAULT_TOL) -> SpectralClass:
    """PLUS when both eigenvalues are non-real, MINUS_ZERO when both are real."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if radicand(t, x) > tol * _radicand_scale(t, x):
        return SpectralClass.PLUS
    return SpectralClass.MINUS_ZERO


def spectral_related(
    t: float, x: Hypercomplex, y: Hypercomplex, tol: float = DEFAULT_TOL
) -> bool:
    """True when ``x`` and ``y`` share a spectral value.

    Compares the stored ``(x, R)`` data (and the branch while ``R > 0``),
    not the evaluated complex numbers.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    s1, s2 = spectralize(t, x), spectralize(t, y)
    scale = max(1.0, abs(s1.x), abs(s2.x), abs(s1.R), abs(s2.R))
    bound = tol * scale
    if abs(s1.x - s2.x) > bound or abs(s1.R - s2.R) > bound:
        return False
    if s1.branch != s2.branch and min(s1.R, s2.R) > bound:
        return False
    return True


def _conjugator_polar(t: float, h: Hypercomplex) -> tuple[float, float, complex]:
    """``z = (w - a) / (t b)`` as ``(gap, |t||b|, u)`` with ``z = gap / (|t||b|) * u``."""
    a, b = h.a, h.b
    q = a.imag
    R = radicand(t, h)
    root = math.sqrt(R)
    # w - a = i (sqrt(R) - q); avoid cancellation when q > 0
    if q > 0:
        gap = -t * abs2(b) / (root + q)
    else:
        gap = root - q
    # i / (t b) = -i conj(b) / (|t| |b|^2) for t < 0
    u = -1j * b.conjugate() / abs(b)
    return gap, abs(t) * abs(b), u


def _check_conjugator_domain(t: float, h: Hypercomplex):
    if t >= 0:
        raise BadScaleError(f"conjugator requires t < 0, got t={t!r}")
    if h.b == 0:
        raise ZeroBError("conjugator divides by t*b; b = 0 needs no conjugation")


def conjugator(t: float, h: Hypercomplex) -> Matrix2C:
    """Matrix ``Q`` in the realization set with ``Q Sigma = [h] Q``.

    ``Q = realize(t, (1, conj(z)))`` where ``z = (w - a) / (t b)`` and ``w``
    is the principal spectral value; ``det Q = 1 - t|z|^2 >= 1``. Only
    defined for ``t < 0`` and ``b != 0``.
    """
    _check_conjugator_domain(t, h)
    gap, tb, u = _conjugator_polar(t, h)
    z = (gap / tb) * u
    return realize(t, Hypercomplex(1, z.conjugate()))


def balanced_conjugator(t: float, h: Hypercomplex) -> Matrix2C:
    """``Q realize(t, (c, 0))`` with real ``c`` chosen so no entry exceeds ``max(1, |t|)``.

    Right-multiplying by a diagonal that commutes with ``Sigma`` keeps the
    intertwining identity, and ``Q^-1 [h] Q`` is unchanged in exact
    arithmetic. When ``|z|`` is large (``|t b|`` tiny next to ``Im a < 0``)
    this form avoids the ``|z|^2`` loss of accuracy of ``Q`` itself.
    """
    _check_conjugator_domain(t, h)
    gap, tb, u = _conjugator_polar(t, h)
    if gap <= tb:
        return realize(t, Hypercomplex(1, ((gap / tb) * u).conjugate()))
    return realize(t, Hypercomplex(tb / gap, u.conjugate()))


def similarity_residual(t: float, h: Hypercomplex) -> float:
    """``max |Sigma - Q^-1 [h] Q|`` for ``t < 0`` (``|Sigma - [h]|`` when b = 0).

    Evaluated with :func:`balanced_conjugator`, which differs from ``Q`` by a
    factor that cancels in ``Q^-1 [h] Q``.
    """
    if t >= 0:
        raise BadScaleError(f"similarity is only established for t < 0, got t={t!r}")
    T = realize(t, h)
    S = spectral_form(t, h)
    if h.b == 0:
        return max_entry_diff(S, T)
    Q = balanced_conjugator(t, h)
    return max_entry_diff(S, mat_mul(mat_mul(mat_inverse(Q), T), Q))


@dataclass(frozen=True)
class RealPoly:
    """Polynomial with real coefficients, lowest degree first."""

    coefficients: tuple[float, ...]

    def __init__(self, coefficients: Sequence[float]):
        coeffs = tuple(float(c) for c in coefficients)
        if not coeffs:
            coeffs = (0.0,)
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc


def poly_eval_matrix(g: RealPoly, M: Matrix2C) -> Matrix2C:
    """Horner evaluation ``g(M)`` with ``M^0 = I``."""
    acc = Matrix2C(0, 0, 0, 0)
    for c in reversed(g.coefficients):
        acc = mat_mul(acc, M) + IDENTITY.scaled(c)
    return acc


def spectral_mapping(t: float, g: RealPoly, x: Hypercomplex) -> tuple[complex, complex]:
    """Eigenvalues of ``g(realize(t, x))`` predicted from the spectral value.

    Returns ``(g(w), g(w'))`` with ``w'`` the symbolic conjugate of ``w``.
    When the spectrum is non-real this is ``(g(w), conj g(w))``; when it is
    real with two distinct roots the two entries are ``g`` at each root.
    """
    s = spectralize(t, x)
    return g(s.value()), g(s.symbolic_conjugate().value())
