"""The 2x2 complex-matrix realization of H_t and a small 2x2 matrix algebra.

``realize(t, (a, b))`` is ``[[a, t b], [conj b, conj a]]``. The plain matrix
routines here (``mat_mul``, ``mat_det``, ...) know nothing about scales and
serve as the brute-force reference the ring and spectral code is checked
against.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import NotClosedError, NotInRealizationError, SingularError
from .ring import DEFAULT_TOL, Hypercomplex, as_complex


@dataclass(frozen=True)
class Matrix2C:
    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __post_init__(self):
        entries = (complex(self.m11), complex(self.m12), complex(self.m21), complex(self.m22))
        if not all(map(cmath.isfinite, entries)):
            # as_complex raises with the offending entry in the message
            for z in entries:
                as_complex(z)
        setattr_ = object.__setattr__
        setattr_(self, "m11", entries[0])
        setattr_(self, "m12", entries[1])
        setattr_(self, "m21", entries[2])
        setattr_(self, "m22", entries[3])

    @classmethod
    def from_rows(cls, rows) -> Matrix2C:
        (m11, m12), (m21, m22) = rows
        return cls(m11, m12, m21, m22)

    @classmethod
    def diag(cls, d1, d2) -> Matrix2C:
        return cls(d1, 0, 0, d2)

    def rows(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.m11, self.m12), (self.m21, self.m22))

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.m11, self.m12, self.m21, self.m22)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows(), dtype=complex)

    def max_abs(self) -> float:
        return max(abs(self.m11), abs(self.m12), abs(self.m21), abs(self.m22))

    def __add__(self, other: Matrix2C) -> Matrix2C:
        return mat_add(self, other)

    def __sub__(self, other: Matrix2C) -> Matrix2C:
        return Matrix2C(*(p - q for p, q in zip(self.entries(), other.entries())))

    def __matmul__(self, other: Matrix2C) -> Matrix2C:
        return mat_mul(self, other)

    def scaled(self, s: complex) -> Matrix2C:
        return Matrix2C(*(s * z for z in self.entries()))


IDENTITY = Matrix2C(1, 0, 0, 1)
ZERO_MATRIX = Matrix2C(0, 0, 0, 0)


def mat_add(A: Matrix2C, B: Matrix2C) -> Matrix2C:
    return Matrix2C(A.m11 + B.m11, A.m12 + B.m12, A.m21 + B.m21, A.m22 + B.m22)


def mat_mul(A: Matrix2C, B: Matrix2C) -> Matrix2C:
    return Matrix2C(
        A.m11 * B.m11 + A.m12 * B.m21,
        A.m11 * B.m12 + A.m12 * B.m22,
        A.m21 * B.m11 + A.m22 * B.m21,
        A.m21 * B.m12 + A.m22 * B.m22,
    )


def mat_adjoint(A: Matrix2C) -> Matrix2C:
    """Conjugate transpose."""
    return Matrix2C(
        A.m11.conjugate(), A.m21.conjugate(), A.m12.conjugate(), A.m22.conjugate()
    )


def mat_trace(A: Matrix2C) -> complex:
    return A.m11 + A.m22


def mat_det(A: Matrix2C) -> complex:
    return A.m11 * A.m22 - A.m12 * A.m21


def mat_inverse(A: Matrix2C, tol: float = 1e-12) -> Matrix2C:
    """Adjugate inverse; singular when ``|det| <= tol * (1 + max|A_ij|^2)``."""
    d = mat_det(A)
    m = A.max_abs()
    if abs(d) <= tol * (1.0 + m * m):
        raise SingularError(f"matrix is singular (det={d!r})")
    return Matrix2C(A.m22 / d, -A.m12 / d, -A.m21 / d, A.m11 / d)


def max_entry_diff(A: Matrix2C, B: Matrix2C) -> float:
    return max(
        abs(A.m11 - B.m11), abs(A.m12 - B.m12), abs(A.m21 - B.m21), abs(A.m22 - B.m22)
    )


def realize(t: float, x: Hypercomplex) -> Matrix2C:
    a, b = x.a, x.b
    return Matrix2C(a, t * b, b.conjugate(), a.conjugate())


def _scale(M: Matrix2C) -> float:
    return max(1.0, M.max_abs())


def realization_residual(t: float, M: Matrix2C) -> float:
    """Distance of ``M`` from the ``[[a, t b], [conj b, conj a]]`` template."""
    return max(abs(M.m22 - M.m11.conjugate()), abs(M.m12 - t * M.m21.conjugate()))


def star_residual(t: float, M: Matrix2C) -> float:
    """Distance of ``M`` from the adjoint template ``[[conj a, b], [t conj b, a]]``."""
    return max(abs(M.m22 - M.m11.conjugate()), abs(M.m21 - t * M.m12.conjugate()))


def unrealize(t: float, M: Matrix2C, tol: float = DEFAULT_TOL) -> Hypercomplex:
    """Recover ``(a, b)`` from a realization matrix.

    ``b`` is read from the (2,1) entry, which does not involve ``t``, so the
    map stays well-defined at ``t = 0``.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    res = realization_residual(t, M)
    if res > tol * _scale(M):
        raise NotInRealizationError(
            f"matrix is not a realization at t={t!r} (residual {res:.3g})"
        )
    return Hypercomplex(M.m11, M.m21.conjugate())


@dataclass(frozen=True)
class MembershipReport:
    in_realization: bool
    in_star_set: bool
    residual: float
    star_residual: float


def membership(t: float, M: Matrix2C, tol: float = DEFAULT_TOL) -> MembershipReport:
    """Test ``M`` against both the realization and the adjoint templates.

    The two flags are independent; ``I_2`` satisfies both for every ``t``.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    bound = tol * _scale(M)
    r1 = realization_residual(t, M)
    r2 = star_residual(t, M)
    return MembershipReport(r1 <= bound, r2 <= bound, r1, r2)


def adjoint_in_ring(t: float, x: Hypercomplex, tol: float = DEFAULT_TOL) -> Hypercomplex:
    """The element whose realization is the adjoint of ``realize(t, x)``.

    Exists for every ``x`` only when ``t = +-1``, where it is
    ``(conj a, b / t)``. For other scales only ``b = 0`` survives.
    """
    a, b = x.a, x.b
    if abs(t * t - 1.0) <= tol:
        return Hypercomplex(a.conjugate(), b / t)
    if abs(b) > tol * max(1.0, abs(a)):
        raise NotClosedError(
            f"adjoint of a realization with b != 0 leaves the ring at t={t!r}"
        )
    return Hypercomplex(a.conjugate(), 0)
