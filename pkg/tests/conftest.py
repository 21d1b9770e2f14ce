from hypothesis import strategies as st

from scaledhyper import Hypercomplex

reals = st.floats(-5, 5, allow_nan=False, allow_infinity=False, allow_subnormal=False)
complexes = st.builds(complex, reals, reals)
elements = st.builds(Hypercomplex, complexes, complexes)
scales = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
negative_scales = st.floats(-10, -1e-3, allow_nan=False, allow_infinity=False)


def close(x, y, tol=1e-12):
    return abs(x.a - y.a) <= tol and abs(x.b - y.b) <= tol


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
