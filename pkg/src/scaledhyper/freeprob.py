"""Trace functionals, star-word moments and operator classification.

A realization ``T = realize(t, x)`` is viewed as a noncommutative random
variable in ``(M_2(C), tau)`` with ``tau = tr / 2``. Its joint moments are the
values ``tau(T^{r_1} ... T^{r_n})`` for words over ``{1, *}``.

Two routes are provided: :func:`word_moment_oracle` multiplies the matrices
out, and :func:`word_moment_closed` uses the polar form ``w = r w_o`` of the
spectral value, ``tau = r^n Re(w_o^{sum e_l})`` with ``e_l = +1`` for a plain
letter and ``-1`` for a star.

The closed form is exact whenever ``T`` is normal (``t = -1``, or ``b = 0``)
and for single-letter-type words such as ``T^n`` or ``(T*)^n`` when ``t < 0``.
For ``t < 0, t != -1, b != 0`` and a word mixing both letters it is not:
conjugating ``T`` to its diagonal form does not conjugate ``T*`` the same
way unless the conjugator is unitary. The oracle is always correct.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    ClassificationMismatchError,
    ParseError,
    SimilarityNotEstablishedError,
    ZeroInputError,
)
from .realization import (
    IDENTITY,
    Matrix2C,
    mat_adjoint,
    mat_mul,
    mat_trace,
    max_entry_diff,
    realize,
)
from .ring import DEFAULT_TOL, Hypercomplex
from .spectral import spectralize

PLAIN = "1"
STAR = "*"


@dataclass(frozen=True)
class StarWord:
    """A nonempty word over ``{"1", "*"}`` choosing ``T`` or ``T*`` per letter."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ParseError("star word must be nonempty")
        bad = set(self.letters) - {PLAIN, STAR}
        if bad:
            raise ParseError(f"star word letters must be '1' or '*', got {sorted(bad)}")

    @classmethod
    def parse(cls, text: str) -> StarWord:
        return cls(text.strip())

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(1 if c == PLAIN else -1 for c in self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(self.exponents)

    @property
    def is_mixed(self) -> bool:
        return PLAIN in self.letters and STAR in self.letters


def all_words(max_length: int, min_length: int = 1) -> Iterator[StarWord]:
    """Every word of length ``min_length..max_length``, shortest first."""
    for n in range(min_length, max_length + 1):
        for letters in itertools.product(PLAIN + STAR, repeat=n):
            yield StarWord("".join(letters))


@dataclass(frozen=True)
class PolarForm:
    r: float
    w_o: complex

    def reconstruct(self) -> complex:
        return self.r * self.w_o


def polar_decompose(z: complex) -> PolarForm:
    z = complex(z)
    r = abs(z)
    if r == 0:
        raise ZeroInputError("0 has no polar angle")
    return PolarForm(r, z / r)


def trace(M: Matrix2C) -> complex:
    return mat_trace(M)


def normalized_trace(M: Matrix2C) -> complex:
    return mat_trace(M) / 2


def word_product(T: Matrix2C, word: StarWord) -> Matrix2C:
    Ts = mat_adjoint(T)
    P = IDENTITY
    for c in word.letters:
        P = mat_mul(P, T if c == PLAIN else Ts)
    return P


def word_moment_oracle(t: float, x: Hypercomplex, word: StarWord) -> complex:
    """``tau`` of the word product, by direct matrix multiplication."""
    return normalized_trace(word_product(realize(t, x), word))


def word_moment_closed(t: float, x: Hypercomplex, word: StarWord) -> float:
    """``r^n Re(w_o^{sum e_l})`` from the polar form of the spectral value.

    Refuses ``t >= 0`` with ``b != 0``, where realization and spectral form
    need not be similar. A zero spectral value gives 0 for any word.
    """
    if t >= 0 and x.b != 0:
        raise SimilarityNotEstablishedError(
            f"closed form needs t < 0 or b = 0 (t={t!r}, b={x.b!r})"
        )
    w = spectralize(t, x).value()
    if w == 0:
        return 0.0
    p = polar_decompose(w)
    return p.r ** len(word) * (p.w_o ** word.exponent_sum).real


def all_word_moments(t: float, x: Hypercomplex, max_length: int) -> dict[str, complex]:
    """Oracle moments of every word up to ``max_length``, sharing prefixes.

    One matrix product per word instead of one per letter.
    """
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    T = realize(t, x)
    factors = {PLAIN: T, STAR: mat_adjoint(T)}
    out = {}
    frontier = [("", IDENTITY)]
    for _ in range(max_length):
        nxt = []
        for prefix, P in frontier:
            for letter, F in factors.items():
                Q = mat_mul(P, F)
                out[prefix + letter] = normalized_trace(Q)
                nxt.append((prefix + letter, Q))
        frontier = nxt
    return out


def moment_sequence(t: float, x: Hypercomplex, n_max: int) -> list[complex]:
    """``[tau(T), tau(T^2), ..., tau(T^n_max)]`` by repeated multiplication."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    T = realize(t, x)
    P = IDENTITY
    out = []
    for _ in range(n_max):
        P = mat_mul(P, T)
        out.append(normalized_trace(P))
    return out


@dataclass(frozen=True)
class OperatorClass:
    self_adjoint: bool
    projection: bool
    normal: bool
    unitary: bool

    def as_dict(self) -> dict:
        return {
            "self_adjoint": self.self_adjoint,
            "projection": self.projection,
            "normal": self.normal,
            "unitary": self.unitary,
        }


def _thresholds(t: float, x: Hypercomplex, tol: float) -> tuple[float, float]:
    """Tolerances for identities linear and quadratic in the entries of ``realize(t, x)``."""
    m = max(abs(x.a), abs(x.b), abs(t) * abs(x.b))
    return tol * max(1.0, m), tol * max(1.0, m * m)


def operator_flags_closed(t: float, x: Hypercomplex, tol: float = DEFAULT_TOL) -> OperatorClass:
    """Operator flags from the per-scale characterizations.

    self-adjoint: ``a`` real, and ``b = 0`` unless ``t = 1``.
    projection:   ``(0,0)`` or ``(1,0)``; at ``t = 1`` also ``(1/2, b)``, ``|b| = 1/2``.
    normal:       always at ``t = -1``; ``a`` real or ``b = 0`` at ``t = 1``;
                  ``b = 0`` otherwise.
    unitary:      ``|a|^2 + |b|^2 = 1`` at ``t = -1``; at ``t = 1`` either
                  ``b = 0, |a| = 1`` or ``a = 0, |b| = 1``; otherwise
                  ``b = 0, |a| = 1``.

    Each case split is evaluated as the scalar identity it abbreviates, e.g.
    "``b = 0`` unless ``t = 1``" is ``(1 - t) b = 0`` and "always at
    ``t = -1``, ``b = 0`` otherwise" is ``(1 - t^2)|b|^2 = 0``. The identities
    are linear or quadratic in the matrix entries, and each is tested against
    the threshold of matching degree, so the float boundary sits where the
    matrix predicate puts it.
    """
    a, b = x.a, x.b
    q = a.imag
    lin, quad = _thresholds(t, x, tol)
    nb, na = abs(b), abs(a)

    # a real and (1 - t) b = 0
    self_adjoint = 2 * abs(q) <= lin and abs(1 - t) * nb <= lin

    # self-adjoint, a^2 + t|b|^2 = a and b (2 Re(a) - 1) = 0
    projection = (
        self_adjoint
        and abs(a * a + t * nb * nb - a) <= quad
        and max(1.0, abs(t)) * nb * abs(2 * a.real - 1) <= quad
    )

    # (1 - t^2)|b|^2 = 0 and (1 + t) Im(a) b = 0
    normal = abs(1 - t * t) * nb * nb <= quad and 2 * abs(1 + t) * abs(q) * nb <= quad

    # |a|^2 + |b|^2 = 1, |a|^2 + t^2 |b|^2 = 1 and (1 + t) a b = 0
    unitary = (
        abs(na * na + nb * nb - 1) <= quad
        and abs(na * na + t * t * nb * nb - 1) <= quad
        and abs(1 + t) * na * nb <= quad
    )
    return OperatorClass(self_adjoint, projection, normal, unitary)


def operator_flags_matrix(T: Matrix2C, tol: float = DEFAULT_TOL) -> OperatorClass:
    """Brute-force flags: ``T* = T``, ``T* = T = T^2``, ``T*T = TT*``, ``T*T = I = TT*``."""
    Ts = mat_adjoint(T)
    lin = tol * max(1.0, T.max_abs())
    quad = tol * max(1.0, T.max_abs() ** 2)
    TsT = mat_mul(Ts, T)
    TTs = mat_mul(T, Ts)
    self_adjoint = max_entry_diff(Ts, T) <= lin
    projection = self_adjoint and max_entry_diff(mat_mul(T, T), T) <= quad
    normal = max_entry_diff(TsT, TTs) <= quad
    unitary = max_entry_diff(TsT, IDENTITY) <= quad and max_entry_diff(TTs, IDENTITY) <= quad
    return OperatorClass(self_adjoint, projection, normal, unitary)


def classify_operator(t: float, x: Hypercomplex, tol: float = DEFAULT_TOL) -> OperatorClass:
    """Closed-form operator flags, cross-checked against the matrix predicates.

    Raises ClassificationMismatchError if the two routes disagree.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    closed = operator_flags_closed(t, x, tol)
    brute = operator_flags_matrix(realize(t, x), tol)
    if closed != brute:
        raise ClassificationMismatchError(
            f"closed-form {closed.as_dict()} != matrix {brute.as_dict()} "
            f"for t={t!r}, x={x}"
        )
    return closed


def word_moments(
    t: float, x: Hypercomplex, words: Sequence[StarWord]
) -> list[tuple[StarWord, complex, float | None]]:
    """Oracle and (where defined) closed-form value for each word."""
    rows = []
    for word in words:
        oracle = word_moment_oracle(t, x, word)
        try:
            closed = word_moment_closed(t, x, word)
        except SimilarityNotEstablishedError:
            closed = None
        rows.append((word, oracle, closed))
    return rows

