"""Sweep the scale and watch the classes change.

Writes the same CSV as ``scaledhyper sweep`` for a few elements, then points
out where each column flips.
"""
from scaledhyper import Hypercomplex
from scaledhyper.cli import SWEEP_COLUMNS, sweep_rows, sweep_scales

cases = {
    "(2,1): singular exactly at t = 4": Hypercomplex(2, 1),
    "(i,1): spectrum turns real at t = 1": Hypercomplex(1j, 1),
    "(0.6, 0.8i): unitary only at t = -1": Hypercomplex(0.6, 0.8j),
}

for title, x in cases.items():
    print(title)
    rows = sweep_rows(x, sweep_scales(-2, 6, 0.5), 1e-9)
    print("  " + ",".join(SWEEP_COLUMNS[:5] + ["unitary"]))
    prev = None
    for r in rows:
        key = (r["algebraic_class"], r["spectral_class"], r["unitary"])
        mark = "  <-" if prev is not None and key != prev else ""
        prev = key
        print(f"  {r['t']:g},{r['det']:.4g},{r['algebraic_class']},{r['R']:.4g},{r['spectral_class']},{r['unitary']}{mark}")
    print()
