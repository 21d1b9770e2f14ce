"""Spectral values, spectral forms and the explicit similarity for t < 0.

The realization of (a, b) has eigenvalues Re(a) +- i sqrt(R) with
R = Im(a)^2 - t|b|^2. For t < 0 the realization is conjugate, inside the
realization set, to the diagonal spectral form; for t > 0 it need not be.
"""
import math

from scaledhyper import (
    Hypercomplex,
    classify_spectral,
    conjugator,
    mat_det,
    realize,
    similarity_residual,
    spectral_form,
    spectralize,
)

x = Hypercomplex(1 + 3j, -1 + 1j)
print("x = (1+3i, -1+i); R = 9 - 2t changes sign at t = 4.5")
for t in (-2.0, -1.0, 0.0, 2.0, 4.5, 6.0):
    s = spectralize(t, x)
    print(f"  t={t:5}: R={s.R:6}  w={s.value():.6f}  conj={s.symbolic_conjugate().value():.6f}  {classify_spectral(t, x)}")

print("\nquaternion case: w = 1 + i sqrt(11) =", spectralize(-1, x).value(), " sqrt(11) =", math.sqrt(11))

print("\nbicomplex example: (-2-i, 1+3i) at t = 1 has real spectrum -2 +- 3")
print("  spectral form:", spectral_form(1, Hypercomplex(-2 - 1j, 1 + 3j)).rows())

print("\nthe conjugator Q for t < 0 satisfies Q Sigma = [h] Q")
for t, h in [(-1.0, Hypercomplex(1j, 1)), (-3.0, Hypercomplex(2 + 1j, 1 - 1j)), (-0.2, Hypercomplex(-1 - 4j, 0.5j))]:
    Q = conjugator(t, h)
    lhs = Q @ spectral_form(t, h)
    rhs = realize(t, h) @ Q
    gap = max(abs(p - q) for p, q in zip(lhs.entries(), rhs.entries()))
    print(f"  t={t:5}, h={h}: det Q = {mat_det(Q).real:.4f}, |Q Sigma - [h] Q| = {gap:.1e}, "
          f"residual {similarity_residual(t, h):.1e}")
