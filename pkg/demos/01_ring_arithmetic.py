"""A tour of the scaled products.

One pair (a, b) of complex numbers means different things at different
scales: t = -1 multiplies like the quaternions, t = 1 like the
split-quaternions (often called bicomplex in this setting), and t = 0 gives
a ring with a large non-invertible part.
"""
from scaledhyper import AlgebraicClass, Hypercomplex, classify_algebraic, det, inverse, mul, realize
from scaledhyper.textio import render_hypercomplex as show

i = Hypercomplex(1j, 0)
j = Hypercomplex(0, 1)

print("j * j at a few scales (the a-part is t):")
for t in (-1.0, 0.0, 1.0, 2.5):
    print(f"  t={t:5}:  {show(mul(t, j, j))}")

k = mul(-1, i, j)
print("\nquaternion units at t = -1")
print("  k = i j      =", show(k))
print("  j i          =", show(mul(-1, j, i)), "(anticommutes)")
print("  k k          =", show(mul(-1, k, k)))

print("\nevery product is also a 2x2 matrix product:")
t = 2.0
x, y = Hypercomplex(1 + 1j, 1), Hypercomplex(0, 1j)
print("  x * y                =", show(mul(t, x, y)))
print("  realize(x) realize(y) =", (realize(t, x) @ realize(t, y)).rows())
print("  realize(x * y)        =", realize(t, mul(t, x, y)).rows())

print("\ninvertibility is decided by det = |a|^2 - t|b|^2:")
x = Hypercomplex(2, 1)
for t in (-1.0, 0.0, 3.0, 4.0, 5.0):
    cls = classify_algebraic(t, x)
    inv = show(inverse(t, x)) if cls is AlgebraicClass.INVERTIBLE else "-"
    print(f"  t={t:4}: det={det(t, x):5}  {cls!s:10}  inverse {inv}")
