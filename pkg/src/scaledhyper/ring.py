"""Arithmetic of the t-scaled hypercomplex ring H_t = (C^2, +, ._t).

Elements are pairs ``(a, b)`` of complex numbers. The scale ``t`` is never
stored on a value; every scaled operation takes it explicitly so one value
can be viewed in any member of the family. ``t = -1`` gives the quaternions,
``t = 1`` the bicomplex numbers.

    >>> mul(-1, Hypercomplex(0, 1), Hypercomplex(0, 1))
    Hypercomplex(a=(-1+0j), b=0j)
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import NonFiniteError, SingularError, ZeroElementError

DEFAULT_TOL = 1e-9


def check_scale(t) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise NonFiniteError(f"scale must be finite, got {t!r}")
    return t


def as_complex(z) -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise NonFiniteError(f"component must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class Hypercomplex:
    """An element ``(a, b)`` of C^2. Components are coerced to ``complex``."""

    a: complex
    b: complex = 0j

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            as_complex(a)
            as_complex(b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __add__(self, other: Hypercomplex) -> Hypercomplex:
        return add(self, other)

    def __neg__(self) -> Hypercomplex:
        return Hypercomplex(-self.a, -self.b)

    def __sub__(self, other: Hypercomplex) -> Hypercomplex:
        return add(self, -other)

    def __iter__(self):
        yield self.a
        yield self.b

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


ZERO = Hypercomplex(0, 0)
ONE = Hypercomplex(1, 0)


class AlgebraicClass(enum.Enum):
    INVERTIBLE = "Invertible"
    SINGULAR = "Singular"
    ZERO = "Zero"

    def __str__(self):
        return self.value


def add(x: Hypercomplex, y: Hypercomplex) -> Hypercomplex:
    return Hypercomplex(x.a + y.a, x.b + y.b)


def mul(t: float, x: Hypercomplex, y: Hypercomplex) -> Hypercomplex:
    """Scaled product ``(a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2))``.

    Associative and distributive for every real ``t`` with unity ``(1, 0)``;
    commutative only in degenerate cases.
    """
    a1, b1 = x.a, x.b
    a2, b2 = y.a, y.b
    return Hypercomplex(
        a1 * a2 + t * b1 * b2.conjugate(),
        a1 * b2 + b1 * a2.conjugate(),
    )


def abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def det(t: float, x: Hypercomplex) -> float:
    """Determinant ``|a|^2 - t |b|^2`` of the realization (always real)."""
    return abs2(x.a) - t * abs2(x.b)


def _det_scale(t: float, x: Hypercomplex) -> float:
    return max(1.0, abs2(x.a) + abs(t) * abs2(x.b))


def classify_algebraic(t: float, x: Hypercomplex, tol: float = DEFAULT_TOL) -> AlgebraicClass:
    """Place ``x`` in the group part, the semigroup part, or at zero.

    The boundary ``|a|^2 = t|b|^2`` is decided relative to
    ``max(1, |a|^2 + |t||b|^2)``. For ``t < 0`` the determinant is a sum of
    nonnegative terms, so any nonzero element is invertible regardless of
    ``tol``.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if x.is_zero:
        return AlgebraicClass.ZERO
    if t < 0:
        return AlgebraicClass.INVERTIBLE
    if abs(det(t, x)) > tol * _det_scale(t, x):
        return AlgebraicClass.INVERTIBLE
    return AlgebraicClass.SINGULAR


def inverse(t: float, x: Hypercomplex, tol: float = DEFAULT_TOL) -> Hypercomplex:
    """Two-sided inverse ``(conj(a), -b) / (|a|^2 - t|b|^2)``.

    Raises ZeroElementError for (0, 0) and SingularError on the
    ``|a|^2 = t|b|^2`` cone.
    """
    cls = classify_algebraic(t, x, tol)
    if cls is AlgebraicClass.ZERO:
        raise ZeroElementError("(0,0) has no inverse")
    if cls is AlgebraicClass.SINGULAR:
        raise SingularError(f"|a|^2 = t|b|^2 at t={t!r}: {x} is not invertible")
    # scale to unit size first so |a|^2 and |b|^2 neither underflow nor overflow
    s = max(abs(x.a), abs(x.b))
    a, b = x.a / s, x.b / s
    d = abs2(a) - t * abs2(b)
    return Hypercomplex(a.conjugate() / d / s, -b / d / s)
