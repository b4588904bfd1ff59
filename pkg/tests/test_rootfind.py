from fractions import Fraction

import pytest
from mpmath import mp, mpc, mpf

from poly.exactpoly import rn_coefficients
from poly.rootfind import (
    RootOptions,
    _aberth_polish,
    _double_precision_seeds,
    _normalise,
    find_all_roots,
    real_roots,
)
from services.spectrum import boundary_polynomial
from utils.errors import ConvergenceFailure, InvalidParameter


def _bisect(f, lo, hi, tol=1e-13):
    flo = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = f(mid)
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


def test_quadratic_hankel_roots():
    roots = find_all_roots(rn_coefficients(2), RootOptions(precision=128))
    assert len(roots) == 2
    lower, upper = (complex(r) for r in roots)
    assert lower == pytest.approx(-0.25 - (12 ** 0.5) / 24 * 1j, abs=1e-15)
    assert upper == lower.conjugate()
    assert not any(r.is_real for r in roots)


def test_integer_roots_are_real_and_sorted():
    roots = find_all_roots((-6, 11, -6, 1), RootOptions(precision=96))
    assert [complex(r) for r in roots] == [pytest.approx(1), pytest.approx(2), pytest.approx(3)]
    assert all(r.is_real for r in roots)
    assert roots[0].refined_precision == 192


def test_boundary_cubic_against_bisection():
    # 24 w^3 - 3 w - 1/2
    coeffs = (Fraction(-1, 2), Fraction(-3), Fraction(0), Fraction(24))
    roots = find_all_roots(coeffs, RootOptions(precision=128))
    real = real_roots(roots)
    assert len(real) == 1
    oracle = _bisect(lambda w: 24 * w ** 3 - 3 * w - 0.5, 0.4, 0.45)
    assert float(real[0].w.re) == pytest.approx(oracle, abs=1e-9)
    assert -1 / (2 * oracle) == pytest.approx(-1.196, abs=1e-3)


@pytest.mark.parametrize("n", [5, 12, 25])
def test_residuals_are_certified(n):
    opts = RootOptions(precision=256 if n > 20 else 128)
    roots = find_all_roots(rn_coefficients(n), opts)
    assert len(roots) == n
    assert all(r.residual_rel <= float(opts.acceptance()) for r in roots)
    assert all(r.w.re < 0 for r in roots)
    keys = [(float(r.w.re), float(r.w.im)) for r in roots]
    assert keys == sorted(keys)


def test_conjugate_pairs_are_exact():
    roots = find_all_roots(rn_coefficients(6), RootOptions(precision=128))
    values = {complex(r) for r in roots}
    assert all(z.conjugate() in values for z in values)


def test_unreachable_tolerance_raises():
    with pytest.raises(ConvergenceFailure):
        find_all_roots(rn_coefficients(5), RootOptions(precision=64, tol=1e-200))


@pytest.mark.parametrize("coeffs", [(3,), (1, 2, 0)])
def test_degenerate_input(coeffs):
    with pytest.raises(InvalidParameter):
        find_all_roots(coeffs)


def test_options_validation():
    with pytest.raises(InvalidParameter):
        RootOptions(precision=32)
    with pytest.raises(InvalidParameter):
        RootOptions(tol=0)
    assert RootOptions(precision=100).doubled().precision == 200


def test_polish_hands_over_to_newton_early():
    q = boundary_polynomial(30, 2)
    with mp.workprec(256):
        normalised = _normalise(q.coeffs)
        _, sweeps = _aberth_polish(normalised, _double_precision_seeds(normalised), 200)
    assert sweeps < 50

    opts = RootOptions(precision=256)
    roots = find_all_roots(q.coeffs, opts)
    assert len(roots) == 31
    assert all(r.residual_rel <= float(opts.acceptance()) for r in roots)


def _expand(leading, roots):
    coeffs = [mpc(1)]
    for r in roots:
        shifted = [mpc(0)] + coeffs
        for k in range(len(coeffs)):
            shifted[k] -= r * coeffs[k]
        coeffs = shifted
    return [leading * c for c in coeffs]


@pytest.mark.parametrize("n", [
    1, 5, 10, 20,
    pytest.param(30, marks=pytest.mark.slow),
    pytest.param(40, marks=pytest.mark.slow),
])
def test_roots_rebuild_the_polynomial(n):
    p = rn_coefficients(n)
    roots = find_all_roots(p, RootOptions(precision=256))
    with mp.workprec(512):
        rebuilt = _expand(mpf(p.leading), [r.w.value for r in roots])
        for exact, value in zip(p.coeffs, rebuilt):
            assert abs(value - exact) <= 1e-8 * exact
