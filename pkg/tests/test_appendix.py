import pytest

import services.appendix as appendix
from services.appendix import (
    check_complex_exclusion,
    check_family_swap,
    check_gamma_one,
    verify_appendix,
)
from services.checks import CheckResult, Report, Status
from services.spectrum import SpectrumOptions

APPENDIX_CHECKS = (
    "gamma_one_empty",
    "lambda1_closed_form",
    "real_eigenvalue_bound",
    "real_bound_cases",
    "complex_root_exclusion",
    "real_root_each_mode",
    "complex_eigenvalue_sector",
    "family_swap_symmetry",
    "coincidences",
)


def test_gamma_one_runs_only_the_empty_spectrum_check():
    report = verify_appendix(1.0, 10)
    assert report.passed
    assert report.by_name("gamma_one_empty").status is Status.PASS
    assert all(c.status is Status.SKIP for c in report.checks[1:])


def _no_solve(*args, **kwargs):
    raise AssertionError("the spectrum should not be recomputed")


def test_gamma_one_certificate_margin(monkeypatch):
    monkeypatch.setattr(appendix, "eigenvalues_ball", _no_solve)
    check = check_gamma_one(12)
    assert check.status is Status.PASS
    assert check.margin > 0


@pytest.mark.parametrize("gamma", [2.0, 0.5])
def test_appendix_suite_passes(gamma, spectrum_gamma2, spectrum_gamma_half):
    eigs = spectrum_gamma2 if gamma == 2.0 else spectrum_gamma_half
    report = verify_appendix(gamma, 8, eigs=eigs)
    assert [c.name for c in report.checks] == list(APPENDIX_CHECKS)
    assert report.passed, [c.line() for c in report.failures()]
    assert report.by_name("coincidences").status is Status.INFO


def test_family_swap_reuses_a_given_mirror(spectrum_gamma2, spectrum_gamma_half, monkeypatch):
    monkeypatch.setattr(appendix, "eigenvalues_ball", _no_solve)
    check = check_family_swap(2.0, 8, spectrum_gamma2, SpectrumOptions(), mirror=spectrum_gamma_half)
    assert check.status is Status.PASS
    report = verify_appendix(0.5, 8, eigs=spectrum_gamma_half, mirror=spectrum_gamma2)
    assert report.passed, [c.line() for c in report.failures()]

def test_exclusion_probes_are_reproducible(spectrum_gamma2):
    first = check_complex_exclusion(2.0, 6, spectrum_gamma2, seed=7)
    second = check_complex_exclusion(2.0, 6, spectrum_gamma2, seed=7)
    assert first == second
    assert first.margin > 0


@pytest.mark.slow
@pytest.mark.parametrize("gamma", [1.5, 2.0, 3.0, 5.0])
def test_desk_scale_appendix(gamma):
    report = verify_appendix(gamma, 40)
    assert report.passed, [c.line() for c in report.failures()]


@pytest.mark.slow
def test_desk_scale_weak_coupling():
    report = verify_appendix(0.5, 40)
    assert report.by_name("complex_eigenvalue_sector").status is Status.PASS


def test_report_lines_and_dict():
    report = Report("demo", {"gamma": 2})
    report.add(CheckResult.judge("ok", True, margin=0.5))
    report.add(CheckResult.judge("bad", False, margin=float("-inf")))
    report.add(CheckResult.skipped("later", "not run"))
    assert [c.line() for c in report.checks] == ["PASS ok 0.5", "FAIL bad -inf", "SKIP later -"]
    assert not report.passed
    assert [c.name for c in report.failures()] == ["bad"]
    data = report.to_dict()
    assert data["checks"][1]["margin"] is None
    assert data["passed"] is False
    with pytest.raises(KeyError):
        report.by_name("missing")
