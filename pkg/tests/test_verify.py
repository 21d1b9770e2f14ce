import pytest

from scaledhyper import Hypercomplex, cli, ring
from scaledhyper.verify import INVARIANT_NAMES, run_verify

GREEN = [n for n in INVARIANT_NAMES if n not in ("free_moment_closed_form", "nonsimilarity_witness")]


def test_every_other_invariant_passes():
    report = run_verify(seed=3, samples=300, only=GREEN)
    assert report.passed, [(r.name, r.first_failure) for r in report.results if not r.passed]


def test_report_is_reproducible():
    a = run_verify(seed=11, samples=100, only=["associativity", "spectral_mapping"])
    b = run_verify(seed=11, samples=100, only=["associativity", "spectral_mapping"])
    assert [r.max_residual for r in a.results] == [r.max_residual for r in b.results]


def test_closed_form_moment_invariant_fails_off_the_normal_case():
    # mixed words at t not in {-1} with b != 0: the polar formula is not the trace
    r = run_verify(seed=1, samples=20, only=["free_moment_closed_form"]).result("free_moment_closed_form")
    assert not r.passed and "word" in r.first_failure


def test_nonsimilarity_witness_fails_under_symbolic_conjugate():
    # det(Sigma) = x^2 - |R| = det([h]) once the conjugate is read symbolically
    r = run_verify(seed=1, samples=20, only=["nonsimilarity_witness"]).result("nonsimilarity_witness")
    assert r.failures == r.checked


def _broken_mul(t, x, y):
    a1, b1 = x.a, x.b
    a2, b2 = y.a, y.b
    return Hypercomplex(a1 * a2 + t * b1 * b2.conjugate(), a1 * b2 - b1 * a2.conjugate())


def test_injected_fault_is_named(monkeypatch, capsys):
    monkeypatch.setattr(ring, "mul", _broken_mul)
    code = cli.main(["verify", "--seed", "5", "--samples", "200", "--only", "associativity,identity"])
    out, err = capsys.readouterr()
    assert code == cli.EXIT_VERIFY
    assert "associativity" in err
    assert "FAIL associativity" in out


def test_samples_must_be_positive():
    with pytest.raises(ValueError):
        run_verify(samples=0)


def test_domain_error_inside_an_invariant_is_reported(monkeypatch):
    from scaledhyper import SingularError, verify

    def boom(rng, n):
        raise SingularError("synthetic")

    monkeypatch.setattr(verify, "INVARIANTS", [("boom", "test", boom)])
    monkeypatch.setattr(verify, "INVARIANT_NAMES", ["boom"])
    r = verify.run_verify(0, 5).result("boom")
    assert not r.passed and r.first_failure == "SingularError: synthetic"
