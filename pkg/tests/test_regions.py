import math

import pytest

from services.checks import Status
from services.spectrum import eigenvalues_ball
from services.regions import (
    RN,
    Contour,
    LambdaEps,
    M,
    MDelta,
    contour_image,
    delta_for_eps,
    fit_constants,
    fitted_regions,
    in_region,
    in_union,
    lambda_to_z,
    sample_contour,
    verify_regions,
    z_to_lambda,
)
from utils.errors import BranchViolation, EmptyInput, InvalidParameter


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "lam, region, inside",
    [
        (-0.5 + 10j, LambdaEps(0.1, 1), True),
        (-6 + 10j, LambdaEps(0.1, 1), False),
        (-2 + 0j, RN(3, 1), True),
        (-2 + 0.1j, RN(3, 1), False),
        (-1 + 1j, M(1), True),
        (-1 - 1j, M(1), True),
        (-1 + 1.01j, M(1), False),
        (-0.5 + 0.1j, M(1), False),
        (-1 + 1j, MDelta(1, 1), True),
        (-1 + 1j, MDelta(0.5, 1), False),
        (0.5 + 1j, LambdaEps(0.1, 100), False),
        (0j, RN(1, 100), False),
    ],
)
def test_in_region(lam, region, inside):
    assert in_region(lam, region) is inside


def test_membership_is_monotone_in_the_constants():
    points = [-0.5 + 3j, -4 + 0.01j, -2 + 2j, -10 + 0j]
    for small, large in [(LambdaEps(0.2, 1), LambdaEps(0.2, 3)), (RN(2, 0.5), RN(2, 5))]:
        assert all(in_region(p, large) for p in points if in_region(p, small))


@pytest.mark.parametrize(
    "build",
    [
        lambda: LambdaEps(0.5, 1),
        lambda: LambdaEps(0.1, 0),
        lambda: RN(0, 1),
        lambda: RN(2, -1),
        lambda: M(0),
        lambda: MDelta(0, 1),
    ],
)
def test_region_parameters_are_validated(build):
    with pytest.raises(InvalidParameter):
        build()


# ---------------------------------------------------------------------------
# Change of variables
# ---------------------------------------------------------------------------

def test_lambda_to_z_example():
    assert complex(lambda_to_z(-3 + 4j, 0.5)) == pytest.approx(1.75 + 6j)
    assert complex(z_to_lambda(1.75 + 6j, 0.5)) == pytest.approx(-3 + 4j)


def test_negative_real_z_maps_to_negative_real_lambda():
    assert complex(z_to_lambda(-1, 0.1)) == pytest.approx(-10)
    assert complex(lambda_to_z(-10, 0.1)) == pytest.approx(-1)


@pytest.mark.parametrize("lam", [-0.2 + 7j, -5 + 0.001j, -1e-3 + 1e3j])
def test_round_trip_upper_quadrant(lam):
    back = complex(z_to_lambda(lambda_to_z(lam, 0.3), 0.3))
    assert back == pytest.approx(lam, rel=1e-14)


def test_branch_violations():
    with pytest.raises(BranchViolation):
        lambda_to_z(-1 - 1j, 0.5)
    with pytest.raises(BranchViolation):
        lambda_to_z(1 + 1j, 0.5)
    with pytest.raises(BranchViolation):
        z_to_lambda(1 - 1j, 0.5)
    with pytest.raises(InvalidParameter):
        z_to_lambda(1j, 0)


# ---------------------------------------------------------------------------
# Contours
# ---------------------------------------------------------------------------

def _values(points):
    return [complex(p.z) for p in points]


def test_sample_z2():
    assert _values(sample_contour(Contour.Z2, 0.1, 0.4, 3)) == [-1, -1 + 0.5j, -1 + 1j]


def test_sample_z1_starts_at_h_power_delta():
    points = sample_contour("z1", 0.01, 0.4, 2)
    assert _values(points) == [pytest.approx(1 + 0.01 ** 0.4 * 1j), 1 + 1j]
    assert float(points[0].z.im) == pytest.approx(0.1585, abs=1e-4)
    assert all(p.contour is Contour.Z1 and p.h == 0.01 and p.delta == 0.4 for p in points)


def test_sample_z3_and_its_lower_variant():
    assert _values(sample_contour("z3", 0.1, 0.4, 3)) == [-1 + 1j, 1j, 1 + 1j]
    assert {complex(p.z).imag for p in sample_contour("z3", 0.1, 0.4, 4, delta0=0.5)} == {0.5}


@pytest.mark.parametrize(
    "args",
    [
        ("z1", 1.0, 0.4, 3),
        ("z1", 0.0, 0.4, 3),
        ("z2", 0.1, 0.5, 3),
        ("z2", 0.1, 0.4, 1),
        ("z9", 0.1, 0.4, 3),
    ],
)
def test_sample_contour_validation(args):
    with pytest.raises(InvalidParameter):
        sample_contour(*args)


def test_contour_image():
    points = sample_contour("z2", 0.1, 0.4, 3)
    image = [complex(v) for v in contour_image(points)]
    assert image[0] == pytest.approx(-10)
    assert all(v.real <= 0 and v.imag >= 0 for v in image)
    assert complex(contour_image(points, h=0.5)[0]) == pytest.approx(-2)


def test_delta_for_eps():
    assert delta_for_eps(0.05) == pytest.approx(0.45)
    with pytest.raises(InvalidParameter):
        delta_for_eps(0.5)


# ---------------------------------------------------------------------------
# Constant fitting
# ---------------------------------------------------------------------------

def test_fit_real_eigenvalue_needs_nothing():
    assert fit_constants([-2 + 0j], 0.1, 3) == (0.0, 0.0)


def test_fit_far_complex_eigenvalue_goes_to_lambda_eps():
    c_eps, c_n = fit_constants([-1 + 100j], 0.1, 3)
    assert c_eps == pytest.approx(1 / (100 ** 0.6 + 1))
    assert c_n == 0.0


def test_fit_takes_the_maximum_per_region():
    c_eps, c_n = fit_constants([-1 + 100j, -2 + 400j, -3 + 0.001j], 0.1, 2)
    assert c_eps == pytest.approx(max(1 / (100 ** 0.6 + 1), 2 / (400 ** 0.6 + 1)))
    assert c_n == pytest.approx(0.001 * 16)


def test_fit_errors():
    with pytest.raises(EmptyInput):
        fit_constants([], 0.1, 3)
    with pytest.raises(InvalidParameter):
        fit_constants([0.5 + 1j], 0.1, 3)


def test_fitted_regions_cover_the_spectrum(spectrum_gamma2):
    lam_eps, rn = fitted_regions(spectrum_gamma2, 0.05, 4)
    assert lam_eps.c_eps > 0 and rn.c_n > 0
    assert all(in_union(e, (lam_eps, rn)) for e in spectrum_gamma2)


def test_regions_suite(spectrum_gamma_half):
    report = verify_regions(spectrum_gamma_half, 0.05, 4)
    assert report.passed, [c.line() for c in report.failures()]
    assert math.isfinite(report.params["c_eps"]) and math.isfinite(report.params["c_n"])


def test_regions_suite_on_empty_spectrum():
    report = verify_regions([], 0.05, 4)
    assert report.passed
    assert {c.status for c in report.checks} == {Status.SKIP}


@pytest.mark.slow
def test_desk_scale_fit_at_weak_coupling():
    eigs = eigenvalues_ball(0.5, 40)
    c_eps, c_n = fit_constants(eigs, 0.05, 4)
    assert math.isfinite(c_eps) and math.isfinite(c_n)
    regions = fitted_regions(eigs, 0.05, 4)
    assert all(in_union(e, regions) for e in eigs)
    report = verify_regions(eigs, 0.05, 4)
    assert report.passed, [c.line() for c in report.failures()]
