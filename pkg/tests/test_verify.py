import pytest

from friezeknot import verify, yamada
from friezeknot.cli import main
from friezeknot.laurent import LaurentPoly


@pytest.fixture
def broken_recursion(monkeypatch):
    # flip the sign of the right-parent weight
    monkeypatch.setattr(yamada, "PHI_WEIGHTS", (yamada.MINUS_A4, LaurentPoly.monomial(1, -4)))
    yamada.clear_caches()
    yield
    monkeypatch.undo()
    yamada.clear_caches()


def test_small_sweep_passes():
    results = verify.run_suites(12, 5)
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]


def test_mutation_is_caught_with_a_fraction(broken_recursion):
    res = verify.suite_phi_oracle(6, 3)
    assert not res.passed
    assert any("/" in msg and "phi differs at" in msg for msg in res.failures)


def test_mutation_fails_the_cli(broken_recursion, capsys):
    assert main(["verify", "--max-q", "6", "--max-len", "3"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "phi differs at 1/1" in out


def test_bounds_are_checked():
    with pytest.raises(ValueError):
        verify.run_suites(0, 3)


def test_workers_agree():
    serial = verify.run_suites(8, 4, suites=[verify.suite_qr, verify.suite_degrees])
    parallel = verify.run_suites(8, 4, workers=2, suites=[verify.suite_qr, verify.suite_degrees])
    assert [(r.name, r.checked, r.passed) for r in serial] == [(r.name, r.checked, r.passed) for r in parallel]
