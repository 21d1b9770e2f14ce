"""Self-verification suite: every invariant of every module on random samples.

Each invariant is a function ``(rng, n) -> Tracker`` that draws its own
samples from a seeded numpy generator, so a run is reproducible from
``(seed, samples)``. Invariants that cost far more per sample than plain
arithmetic (word moments, polynomial evaluation) run on a capped subsample;
the cap is listed in ``SUBSAMPLE_CAPS``.

Scaled products are looked up as ``ring.mul`` at call time so a patched
multiplication is what gets verified.
"""
from __future__ import annotations

import cmath
import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import freeprob, realization, ring, spectral, textio
from .errors import HypercomplexError
from .freeprob import StarWord, all_words
from .realization import (
    IDENTITY,
    mat_add,
    mat_adjoint,
    mat_det,
    mat_inverse,
    mat_mul,
    mat_trace,
    max_entry_diff,
    realize,
)
from .ring import AlgebraicClass, Hypercomplex, abs2
from .spectral import SpectralClass

COMPONENT_RANGE = 5.0
SCALE_RANGE = 10.0
WORD_LENGTH = 6
SUBSAMPLE_CAPS = {
    "free_moment_closed_form": 100,
    "free_moment_closed_form_normal": 100,
    "unitary_moment": 200,
    "spectral_mapping": 1000,
    "power_trace": 2000,
}


@dataclass
class Tracker:
    """Worst residual and failure count of one invariant."""

    checked: int = 0
    failures: int = 0
    max_residual: float = 0.0
    first_failure: str = ""

    def residual(self, value: float, bound: float, where: Callable[[], str] = lambda: ""):
        self.checked += 1
        if not value <= bound:
            self._fail(f"residual {value:.3g} > {bound:.3g} {where()}")
        if value > self.max_residual or math.isnan(value):
            self.max_residual = value

    def flag(self, ok: bool, where: Callable[[], str] = lambda: ""):
        self.checked += 1
        if not ok:
            self._fail(where())

    def _fail(self, msg: str):
        self.failures += 1
        if not self.first_failure:
            self.first_failure = msg.strip()


@dataclass
class InvariantResult:
    name: str
    module: str
    checked: int
    failures: int
    max_residual: float
    seconds: float
    first_failure: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerifyReport:
    seed: int
    samples: int
    results: list[InvariantResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failing(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def result(self, name: str) -> InvariantResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


# ---- sampling -------------------------------------------------------------

def _c(v) -> complex:
    return complex(float(v[0]), float(v[1]))


def random_elements(rng: np.random.Generator, n: int, r: float = COMPONENT_RANGE) -> list[Hypercomplex]:
    v = rng.uniform(-r, r, size=(n, 4))
    return [Hypercomplex(complex(p, q), complex(u, w)) for p, q, u, w in v.tolist()]


def random_scales(rng: np.random.Generator, n: int, lo: float = -SCALE_RANGE, hi: float = SCALE_RANGE) -> list[float]:
    return rng.uniform(lo, hi, size=n).tolist()


def random_negative_scales(rng: np.random.Generator, n: int) -> list[float]:
    # uniform on (0, 10] then negated, so t = 0 never occurs
    return (-(SCALE_RANGE - rng.uniform(0, SCALE_RANGE, size=n))).tolist()


def _mag(*xs: Hypercomplex) -> float:
    return max(max(abs(x.a), abs(x.b)) for x in xs)


def _diff(x: Hypercomplex, y: Hypercomplex) -> float:
    return max(abs(x.a - y.a), abs(x.b - y.b))


def _at(t, *xs) -> Callable[[], str]:
    return lambda: f"at t={t!r}, " + ", ".join(textio.render_hypercomplex(x, 17) for x in xs)


# ---- hypercomplex ring ----------------------------------------------------

def inv_associativity(rng, n):
    tr = Tracker()
    ts = random_scales(rng, n)
    xs, ys, zs = random_elements(rng, n), random_elements(rng, n), random_elements(rng, n)
    for t, x, y, z in zip(ts, xs, ys, zs):
        left = ring.mul(t, ring.mul(t, x, y), z)
        right = ring.mul(t, x, ring.mul(t, y, z))
        m = max(_mag(x, y, z), abs(t))
        tr.residual(_diff(left, right), 1e-10 * (1 + m) ** 3, _at(t, x, y, z))
    return tr


def inv_distributivity(rng, n):
    tr = Tracker()
    ts = random_scales(rng, n)
    xs, ys, zs = random_elements(rng, n), random_elements(rng, n), random_elements(rng, n)
    for t, x, y, z in zip(ts, xs, ys, zs):
        bound = 1e-10 * (1 + max(_mag(x, y, z), abs(t))) ** 3
        left = ring.mul(t, x, y + z)
        tr.residual(_diff(left, ring.mul(t, x, y) + ring.mul(t, x, z)), bound, _at(t, x, y, z))
        right = ring.mul(t, y + z, x)
        tr.residual(_diff(right, ring.mul(t, y, x) + ring.mul(t, z, x)), bound, _at(t, x, y, z))
    return tr


def inv_identity(rng, n):
    tr = Tracker()
    for t, x in zip(random_scales(rng, n), random_elements(rng, n)):
        tr.residual(_diff(ring.mul(t, ring.ONE, x), x), 1e-14 * max(1.0, _mag(x)), _at(t, x))
        tr.residual(_diff(ring.mul(t, x, ring.ONE), x), 1e-14 * max(1.0, _mag(x)), _at(t, x))
    return tr


def inv_det_multiplicativity(rng, n):
    tr = Tracker()
    ts = random_scales(rng, n)
    for t, x, y in zip(ts, random_elements(rng, n), random_elements(rng, n)):
        lhs = ring.det(t, ring.mul(t, x, y))
        rhs = ring.det(t, x) * ring.det(t, y)
        # relative to the size of the terms, since det itself may cancel to 0
        sx = abs2(x.a) + abs(t) * abs2(x.b)
        sy = abs2(y.a) + abs(t) * abs2(y.b)
        tr.residual(abs(lhs - rhs), 1e-10 * max(1.0, sx * sy), _at(t, x, y))
    return tr


def inv_inverse_consistency(rng, n):
    tr = Tracker()
    for t, x in zip(random_scales(rng, n), random_elements(rng, n)):
        if ring.classify_algebraic(t, x) is not AlgebraicClass.INVERTIBLE:
            continue
        xi = ring.inverse(t, x)
        tr.residual(_diff(ring.mul(t, x, xi), ring.ONE), 1e-9, _at(t, x))
        tr.residual(_diff(ring.mul(t, xi, x), ring.ONE), 1e-9, _at(t, x))
        tr.residual(max_entry_diff(realize(t, xi), mat_inverse(realize(t, x))), 1e-9, _at(t, x))
    return tr


def inv_regime_law(rng, n):
    tr = Tracker()
    xs = random_elements(rng, n)
    # include elements with one component zero, where the determinant is smallest
    xs += [Hypercomplex(0, x.b) for x in xs[: n // 4]] + [Hypercomplex(x.a, 0) for x in xs[: n // 4]]
    for t, x in zip(random_negative_scales(rng, len(xs)), xs):
        tr.flag(ring.classify_algebraic(t, x) is AlgebraicClass.INVERTIBLE, _at(t, x))
    return tr


def inv_invertibility_by_regime(rng, n):
    """t = 0: invertible iff a != 0; t > 0: iff |a|^2 - t|b|^2 != 0."""
    tr = Tracker()
    xs = random_elements(rng, n)
    for k, x in enumerate(xs):
        if k % 4 == 0:
            x = Hypercomplex(0, x.b)
        cls = ring.classify_algebraic(0.0, x)
        tr.flag((cls is AlgebraicClass.INVERTIBLE) == (x.a != 0), _at(0.0, x))
    for t, x in zip(random_scales(rng, n, 0.0, SCALE_RANGE), random_elements(rng, n)):
        d = abs2(x.a) - t * abs2(x.b)
        cls = ring.classify_algebraic(t, x)
        if abs(d) > 1e-6 * max(1.0, abs2(x.a) + t * abs2(x.b)):
            tr.flag(cls is AlgebraicClass.INVERTIBLE, _at(t, x))
    # exact cone points: b = 1, a = sqrt(t) on a grid where the arithmetic is exact
    for k in range(1, 9):
        t = float(k * k) / 4.0
        x = Hypercomplex(k / 2.0, 1.0)
        tr.flag(ring.classify_algebraic(t, x) is AlgebraicClass.SINGULAR, _at(t, x))
    return tr


# ---- realization ----------------------------------------------------------

def inv_homomorphism(rng, n):
    tr = Tracker()
    ts = random_scales(rng, n)
    for t, x, y in zip(ts, random_elements(rng, n), random_elements(rng, n)):
        X, Y = realize(t, x), realize(t, y)
        tr.residual(max_entry_diff(realize(t, x + y), mat_add(X, Y)), 1e-14 * max(1.0, abs(t)), _at(t, x, y))
        scale = max(1.0, X.max_abs() * Y.max_abs())
        tr.residual(max_entry_diff(realize(t, ring.mul(t, x, y)), mat_mul(X, Y)), 1e-12 * scale, _at(t, x, y))
    return tr


def inv_round_trip(rng, n):
    tr = Tracker()
    for t, x in zip(random_scales(rng, n), random_elements(rng, n)):
        tr.flag(realization.unrealize(t, realize(t, x)) == x, _at(t, x))
    for x in random_elements(rng, max(1, n // 10)):
        tr.flag(realization.unrealize(0.0, realize(0.0, x)) == x, _at(0.0, x))
    return tr


def inv_det_agreement(rng, n):
    tr = Tracker()
    for t, x in zip(random_scales(rng, n), random_elements(rng, n)):
        md = mat_det(realize(t, x))
        scale = max(1.0, abs2(x.a) + abs(t) * abs2(x.b))
        tr.residual(abs(md - ring.det(t, x)), 1e-12 * scale, _at(t, x))
    return tr


def inv_adjoint_closure(rng, n):
    tr = Tracker()
    for t in (-1.0, 1.0):
        for x in random_elements(rng, n):
            A = mat_adjoint(realize(t, x))
            tr.flag(realization.membership(t, A).in_realization, _at(t, x))
            y = realization.adjoint_in_ring(t, x)
            tr.residual(max_entry_diff(realize(t, y), A), 1e-14 * max(1.0, _mag(x)), _at(t, x))
    witness = Hypercomplex(0, 1)
    for t in random_scales(rng, max(4, n // 10)) + [-0.5, 0.0, 0.5, 2.0]:
        if abs(t * t - 1.0) <= 1e-6:
            continue
        A = mat_adjoint(realize(t, witness))
        tr.flag(not realization.membership(t, A).in_realization, _at(t, witness))
    return tr


def inv_star_set_closure(rng, n):
    tr = Tracker()
    ts = random_scales(rng, n)
    for t, x, y in zip(ts, random_elements(rng, n), random_elements(rng, n)):
        X = mat_adjoint(realize(t, x))
        Y = mat_adjoint(realize(t, y))
        P = mat_mul(X, Y)
        tr.residual(realization.star_residual(t, P), 1e-12 * max(1.0, P.max_abs()), _at(t, x, y))
    return tr


# ---- spectral -------------------------------------------------------------

def _regime_samples(rng, n):
    """Samples split across R > 0, R < 0 and exact R = 0.

    The R = 0 samples live on a dyadic grid (t in {1/4, 1, 4}) so that
    Im(a)^2 = t|b|^2 holds exactly in floating point.
    """
    out = []
    k = n // 3
    for t, x in zip(random_negative_scales(rng, k), random_elements(rng, k)):
        out.append((t, x))  # R = q^2 + |t||b|^2 > 0 unless q = b = 0
    for t, x in zip(random_scales(rng, k, 0.5, SCALE_RANGE), random_elements(rng, k)):
        out.append((t, Hypercomplex(complex(x.a.real, 0.1 * x.a.imag), x.b)))  # mostly R < 0
    grid = rng.integers(-40, 41, size=(n - 2 * k, 3)).tolist()
    for j, (p, q, m) in enumerate(grid):
        s = (0.5, 1.0, 2.0)[j % 3]
        q = q / 8.0
        rot = (1, 1j, -1, -1j)[m % 4]
        b = rot * q / s
        out.append((s * s, Hypercomplex(complex(p / 8.0, q), b)))
    return out


def _oracle_roots(T) -> tuple[complex, complex]:
    """Quadratic-formula roots of the matrix's own trace/det polynomial."""
    tr_, dt = mat_trace(T), mat_det(T)
    disc = tr_ * tr_ - 4 * dt
    s = cmath.sqrt(disc)
    return (tr_ + s) / 2, (tr_ - s) / 2


def _pair_gap(p, q) -> float:
    straight = max(abs(p[0] - q[0]), abs(p[1] - q[1]))
    swapped = max(abs(p[0] - q[1]), abs(p[1] - q[0]))
    return min(straight, swapped)


def inv_root_consistency(rng, n):
    tr = Tracker()
    for t, x in _regime_samples(rng, n):
        c0, c1 = spectral.char_poly(t, x)
        got = spectral.spectrum(t, x)
        ref = _oracle_roots(realize(t, x))
        tr.residual(_pair_gap(got, ref), 1e-9 * (1 + abs(c0) + abs(c1)), _at(t, x))
    return tr


def inv_case_split(rng, n):
    tr = Tracker()
    for t, x in _regime_samples(rng, n):
        R = spectral.radicand(t, x)
        w, wc = spectral.spectrum(t, x)
        xr = x.a.real
        if R == 0:
            ok = w == wc == complex(xr, 0)
        elif R < 0:
            ok = w.imag == 0 and wc.imag == 0 and w.real < wc.real
        else:
            ok = w.imag > 0 and wc == w.conjugate() or (x.b == 0 and wc == w.conjugate())
        tr.flag(ok, _at(t, x))
    return tr


def inv_classification_equivalence(rng, n):
    tr = Tracker()
    for t, x in _regime_samples(rng, n):
        cls = spectral.classify_spectral(t, x)
        ref = _oracle_roots(realize(t, x))
        # a root counts as real when Im^2 is within the classification tolerance
        scale = max(1.0, x.a.imag ** 2, abs(t) * abs2(x.b))
        nonreal = all(r.imag ** 2 > ring.DEFAULT_TOL * scale for r in ref)
        tr.flag((cls is SpectralClass.PLUS) == nonreal, _at(t, x))
    return tr


def inv_spectral_relation(rng, n):
    tr = Tracker()
    m = max(3, min(n, 300) // 10)
    for _ in range(10):
        t = random_scales(rng, 1)[0]
        base = random_elements(rng, m)
        # give some samples shared spectral values: same Re(a) and R
        pool = base + [Hypercomplex(complex(x.a.real, -x.a.imag), x.b.conjugate()) for x in base[: m // 2]]
        rel = [[spectral.spectral_related(t, x, y) for y in pool] for x in pool]
        k = len(pool)
        for i in range(k):
            tr.flag(rel[i][i], _at(t, pool[i]))
            for j in range(k):
                tr.flag(rel[i][j] == rel[j][i], _at(t, pool[i], pool[j]))
                if rel[i][j]:
                    for l in range(k):
                        if rel[j][l] and not rel[i][l]:
                            tr.flag(False, _at(t, pool[i], pool[j], pool[l]))
    return tr


def _nonzero_b(rng, n):
    xs = random_elements(rng, n)
    return [x for x in xs if x.b != 0]


def inv_intertwining(rng, n):
    tr = Tracker()
    xs = _nonzero_b(rng, n)
    for t, h in zip(random_negative_scales(rng, len(xs)), xs):
        Q = spectral.conjugator(t, h)
        S = spectral.spectral_form(t, h)
        T = realize(t, h)
        lhs, rhs = mat_mul(Q, S), mat_mul(T, Q)
        scale = max(1.0, Q.max_abs() * max(S.max_abs(), T.max_abs()))
        tr.residual(max_entry_diff(lhs, rhs), 1e-10 * scale, _at(t, h))
        tr.flag(mat_det(Q).real >= 1.0 - 1e-12, _at(t, h))
        tr.residual(spectral.similarity_residual(t, h), 1e-9, _at(t, h))
    return tr


def inv_similarity_trace_det(rng, n):
    tr = Tracker()
    for t, h in zip(random_negative_scales(rng, n), random_elements(rng, n)):
        S, T = spectral.spectral_form(t, h), realize(t, h)
        scale = max(1.0, T.max_abs() ** 2)
        tr.residual(abs(mat_trace(S) - mat_trace(T)), 1e-10 * max(1.0, T.max_abs()), _at(t, h))
        tr.residual(abs(mat_det(S) - mat_det(T)), 1e-10 * scale, _at(t, h))
    return tr


def inv_nonsimilarity_witness(rng, n):
    """t > 0 and |a|^2 < t|b|^2: det(Sigma) > 0 > det([h])."""
    tr = Tracker()
    for t, h in zip(random_scales(rng, n, 0.1, SCALE_RANGE), random_elements(rng, n)):
        # shrink a until it sits strictly inside the cone |a|^2 < t|b|^2
        lim = math.sqrt(t) * abs(h.b)
        if lim == 0:
            continue
        a = h.a * (0.9 * lim / max(abs(h.a), lim))
        x = Hypercomplex(a, h.b)
        dS = mat_det(spectral.spectral_form(t, x)).real
        dT = mat_det(realize(t, x)).real
        tr.flag(dS > 0 > dT, _at(t, x))
    return tr


def _random_poly(rng) -> spectral.RealPoly:
    deg = int(rng.integers(0, 6))
    return spectral.RealPoly(rng.uniform(-1, 1, size=deg + 1).tolist())


def inv_spectral_mapping(rng, n):
    """Eigenvalues of g(T) vs (g(w), g(w')), compared through trace and det.

    Matching the multiset through its symmetric functions keeps the check
    well-conditioned when g(w) and g(w') nearly coincide.
    """
    tr = Tracker()
    ts = random_scales(rng, n, -3.0, 3.0)
    xs = random_elements(rng, n, 2.0)
    for t, x in zip(ts, xs):
        g = _random_poly(rng)
        G = spectral.poly_eval_matrix(g, realize(t, x))
        p, q = spectral.spectral_mapping(t, g, x)
        m = max(1.0, abs(p), abs(q), G.max_abs())
        tr.residual(abs(mat_trace(G) - (p + q)), 1e-8 * m, _at(t, x))
        tr.residual(abs(mat_det(G) - p * q), 1e-8 * m * m, _at(t, x))
    return tr


def inv_conjugate_commutation(rng, n):
    tr = Tracker()
    zs = rng.uniform(-3, 3, size=(n, 2)).tolist()
    for z in zs:
        g = _random_poly(rng)
        z = _c(z)
        lhs, rhs = g(z.conjugate()), g(z).conjugate()
        tr.residual(abs(lhs - rhs), 1e-12 * max(1.0, abs(rhs)), lambda: f"z={z!r}")
    return tr


# ---- free probability -----------------------------------------------------

WORDS = list(all_words(WORD_LENGTH))


def inv_free_moment_closed_form(rng, n):
    """Closed form vs oracle for every word of length <= 6, t < 0 or b = 0."""
    tr = Tracker()
    cases = list(zip(random_negative_scales(rng, n), random_elements(rng, n, 2.0)))
    cases += [(t, Hypercomplex(x.a, 0)) for t, x in zip(random_scales(rng, n // 4 + 1), random_elements(rng, n // 4 + 1, 2.0))]
    _check_moments(tr, cases, WORDS)
    return tr


def inv_free_moment_closed_form_normal(rng, n):
    """The same comparison restricted to normal T (t = -1 or b = 0) plus pure words."""
    tr = Tracker()
    cases = [(-1.0, x) for x in random_elements(rng, n, 2.0)]
    cases += [(t, Hypercomplex(x.a, 0)) for t, x in zip(random_scales(rng, n), random_elements(rng, n, 2.0))]
    _check_moments(tr, cases, WORDS)
    pure = [w for w in WORDS if not w.is_mixed]
    _check_moments(tr, list(zip(random_negative_scales(rng, n), random_elements(rng, n, 2.0))), pure)
    return tr


def _check_moments(tr: Tracker, cases, words):
    for t, x in cases:
        r = abs(spectral.spectralize(t, x).value())
        table = freeprob.all_word_moments(t, x, WORD_LENGTH)
        for w in words:
            oracle = table[w.letters]
            closed = freeprob.word_moment_closed(t, x, w)
            scale = 1 + r ** len(w)
            where = lambda: f"word {w} " + _at(t, x)()
            tr.residual(abs(closed - oracle.real), 1e-8 * scale, where)
            tr.residual(abs(oracle.imag), 1e-10 * scale, where)


def inv_trace_conjugation(rng, n):
    tr = Tracker()
    v = rng.uniform(-COMPONENT_RANGE, COMPONENT_RANGE, size=(n, 8)).tolist()
    for row in v:
        M = realization.Matrix2C(_c(row[0:2]), _c(row[2:4]), _c(row[4:6]), _c(row[6:8]))
        ok = freeprob.normalized_trace(mat_adjoint(M)) == freeprob.normalized_trace(M).conjugate()
        tr.flag(ok, lambda: f"M={M}")
    return tr


def inv_power_trace(rng, n):
    """trace(T^n) = 2 Re(w^n) for t < 0, n <= 8, relative to 1 + |w|^n."""
    tr = Tracker()
    for t, x in zip(random_negative_scales(rng, n), random_elements(rng, n, 2.0)):
        T = realize(t, x)
        w = spectral.spectralize(t, x).value()
        P = IDENTITY
        for k in range(1, 9):
            P = mat_mul(P, T)
            tr.residual(abs(mat_trace(P) - 2 * (w ** k).real), 1e-8 * (1 + abs(w) ** k), _at(t, x))
    return tr


def inv_mixed_moment_length2(rng, n):
    tr = Tracker()
    star = StarWord("*")
    ts = random_scales(rng, n)
    for t, x, y in zip(ts, random_elements(rng, n), random_elements(rng, n)):
        A1, A2s = realize(t, x), freeprob.word_product(realize(t, y), star)
        oracle = freeprob.normalized_trace(mat_mul(A1, A2s))
        formula = (x.a * y.a.conjugate()).real + (t * t * x.b * y.b.conjugate() + x.b.conjugate() * y.b) / 2
        scale = max(1.0, A1.max_abs() * A2s.max_abs())
        tr.residual(abs(oracle - formula), 1e-10 * scale, _at(t, x, y))
    return tr


def _classification_witnesses(rng, n):
    out = [(3.0, Hypercomplex(5, 0.2))]
    for t in (-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 3.0):
        out += [(t, Hypercomplex(0, 0)), (t, Hypercomplex(1, 0)), (t, Hypercomplex(rng.uniform(-3, 3), 0))]
        th = rng.uniform(0, 2 * math.pi)
        out.append((t, Hypercomplex(cmath.exp(1j * th), 0)))
    out += [(-1.0, Hypercomplex(0.6, 0.8j)), (1.0, Hypercomplex(0, 1)), (1.0, Hypercomplex(0, -1))]
    k = max(4, n // 20)
    for v in rng.normal(size=(k, 4)).tolist():
        nrm = math.sqrt(sum(c * c for c in v))
        out.append((-1.0, Hypercomplex(complex(v[0], v[1]) / nrm, complex(v[2], v[3]) / nrm)))
    for v in rng.uniform(-3, 3, size=(k, 3)).tolist():
        th = v[2]
        out.append((1.0, Hypercomplex(v[0], complex(v[1], th))))
        out.append((1.0, Hypercomplex(0.5, 0.5 * cmath.exp(1j * th))))
        out.append((1.0, Hypercomplex(0, cmath.exp(1j * th))))
        out.append((-1.0, Hypercomplex(complex(v[0], v[1]), th)))
    return out


def inv_classification_consistency(rng, n):
    tr = Tracker()
    cases = list(zip(random_scales(rng, n), random_elements(rng, n)))
    cases += _classification_witnesses(rng, n)
    for t, x in cases:
        closed = freeprob.operator_flags_closed(t, x, 1e-10)
        brute = freeprob.operator_flags_matrix(realize(t, x), 1e-10)
        tr.flag(closed == brute, lambda: f"{closed} vs {brute} " + _at(t, x)())
    return tr


def inv_unitary_moment(rng, n):
    tr = Tracker()
    words = list(all_words(4))
    for t in random_scales(rng, n):
        if abs(abs(t) - 1.0) < 1e-6:
            continue
        a = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        x = Hypercomplex(a, 0)
        for w in words:
            got = freeprob.word_moment_oracle(t, x, w)
            tr.residual(abs(got - (a ** w.exponent_sum).real), 1e-10, _at(t, x))
    return tr


# ---- text encodings -------------------------------------------------------

def inv_json_round_trip(rng, n):
    tr = Tracker()
    for x in random_elements(rng, n, 1e3):
        text = json.dumps(textio.hypercomplex_to_json(x))
        back = textio.hypercomplex_from_json(json.loads(text))
        tr.flag(back == x, lambda: text)
    return tr


# name, module, function; the report keeps this order
INVARIANTS: list[tuple[str, str, Callable]] = [
    ("associativity", "hypercomplex_ring", inv_associativity),
    ("distributivity", "hypercomplex_ring", inv_distributivity),
    ("identity", "hypercomplex_ring", inv_identity),
    ("det_multiplicativity", "hypercomplex_ring", inv_det_multiplicativity),
    ("inverse_consistency", "hypercomplex_ring", inv_inverse_consistency),
    ("regime_law", "hypercomplex_ring", inv_regime_law),
    ("invertibility_by_regime", "hypercomplex_ring", inv_invertibility_by_regime),
    ("homomorphism", "realization", inv_homomorphism),
    ("round_trip", "realization", inv_round_trip),
    ("det_agreement", "realization", inv_det_agreement),
    ("adjoint_closure", "realization", inv_adjoint_closure),
    ("star_set_closure", "realization", inv_star_set_closure),
    ("root_consistency", "spectral", inv_root_consistency),
    ("case_split", "spectral", inv_case_split),
    ("classification_equivalence", "spectral", inv_classification_equivalence),
    ("spectral_relation", "spectral", inv_spectral_relation),
    ("intertwining", "spectral", inv_intertwining),
    ("similarity_trace_det", "spectral", inv_similarity_trace_det),
    ("nonsimilarity_witness", "spectral", inv_nonsimilarity_witness),
    ("spectral_mapping", "spectral", inv_spectral_mapping),
    ("conjugate_commutation", "spectral", inv_conjugate_commutation),
    ("free_moment_closed_form", "free_probability", inv_free_moment_closed_form),
    ("free_moment_closed_form_normal", "free_probability", inv_free_moment_closed_form_normal),
    ("trace_conjugation", "free_probability", inv_trace_conjugation),
    ("power_trace", "free_probability", inv_power_trace),
    ("mixed_moment_length2", "free_probability", inv_mixed_moment_length2),
    ("classification_consistency", "free_probability", inv_classification_consistency),
    ("unitary_moment", "free_probability", inv_unitary_moment),
    ("json_round_trip", "cli", inv_json_round_trip),
]

INVARIANT_NAMES = [name for name, _, _ in INVARIANTS]


def run_verify(seed: int = 0, samples: int = 1000, only: list[str] | None = None) -> VerifyReport:
    """Run the invariant suite. Each invariant gets its own child generator."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if only:
        unknown = set(only) - set(INVARIANT_NAMES)
        if unknown:
            raise ValueError(f"unknown invariants: {sorted(unknown)}")
    report = VerifyReport(seed, samples)
    children = np.random.SeedSequence(seed).spawn(len(INVARIANTS))
    for (name, module, fn), child in zip(INVARIANTS, children):
        if only and name not in only:
            continue
        n = min(samples, SUBSAMPLE_CAPS.get(name, samples))
        rng = np.random.default_rng(child)
        start = time.perf_counter()
        try:
            tr = fn(rng, n)
        except HypercomplexError as exc:
            msg = f"{type(exc).__name__}: {exc}"
            tr = Tracker()
            tr.flag(False, lambda: msg)
        report.results.append(
            InvariantResult(
                name, module, tr.checked, tr.failures, tr.max_residual,
                time.perf_counter() - start, tr.first_failure,
            )
        )
    return report
