"""Free moments tau(T^{r_1} ... T^{r_n}) of a realization T.

The oracle multiplies matrices; the closed form r^n Re(w_o^{sum e}) uses only
the spectral value. The two agree when T is normal (t = -1, or b = 0) and on
words without mixed letters. For other negative scales the mixed words
disagree, since conjugating T to diagonal form does not do the same to T*.
"""
from scaledhyper import (
    Hypercomplex,
    StarWord,
    classify_operator,
    moment_sequence,
    word_moment_closed,
    word_moment_oracle,
)

x = Hypercomplex(1j, 1)
words = [StarWord(w) for w in ("1", "11", "1*", "*1", "11*", "1*1*")]

for t in (-1.0, -2.0):
    print(f"t = {t}, x = {x}, normal: {classify_operator(t, x).normal}")
    print(f"  {'word':6} {'oracle':>22} {'closed':>10}")
    for w in words:
        o = word_moment_oracle(t, x, w)
        c = word_moment_closed(t, x, w)
        print(f"  {w!s:6} {o.real:10.4f}{o.imag:+10.4f}i {c:10.4f}")
    print()

print("moment sequences")
print("  t=-2, (3,0):", moment_sequence(-2, Hypercomplex(3, 0), 4))
print("  t= 1, (0,1):", moment_sequence(1, Hypercomplex(0, 1), 6))
print("  t= 5, (1,0):", moment_sequence(5, Hypercomplex(1, 0), 4))

print("\nfor t >= 0 and b != 0 only the oracle is available:")
print("  tau(T T*) at t=2, (1,1):", word_moment_oracle(2, Hypercomplex(1, 1), StarWord("1*")))
