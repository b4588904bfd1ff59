import math

import numpy as np
import pytest
from mpmath import mp

from poly.exactpoly import (
    RnPolynomial,
    default_precision,
    derivative,
    evaluate,
    rn_coefficients,
)
from utils.errors import InvalidParameter
from utils.numbers import ComplexHP


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (0, (1,)),
        (1, (1, 2)),
        (2, (1, 6, 12)),
        (3, (1, 12, 60, 120)),
    ],
)
def test_small_hankel_polynomials(n, coeffs):
    assert rn_coefficients(n).coeffs == coeffs


@pytest.mark.parametrize("n", [5, 17, 40])
def test_coefficients_match_factorial_formula(n):
    p = rn_coefficients(n)
    expected = tuple(
        math.factorial(n + m) // (math.factorial(m) * math.factorial(n - m)) for m in range(n + 1)
    )
    assert p.coeffs == expected
    assert p.degree == n
    assert p.leading == math.factorial(2 * n) // math.factorial(n)


def test_negative_order_is_rejected():
    with pytest.raises(InvalidParameter):
        rn_coefficients(-1)


@pytest.mark.parametrize("coeffs", [(1, 6), (2, 6, 12), (1, 6, 13), (1, -6, 12)])
def test_polynomial_invariants_are_checked(coeffs):
    with pytest.raises(InvalidParameter):
        RnPolynomial(2, coeffs)


def test_derivative():
    assert derivative(rn_coefficients(3)) == (12, 120, 360)
    assert derivative((5,)) == (0,)
    with pytest.raises(InvalidParameter):
        derivative(())


def test_default_precision():
    assert default_precision(1) == 128
    assert default_precision(20) == 128
    assert default_precision(21) == 256
    assert default_precision(40) == 256
    bits = default_precision(60)
    assert bits % 64 == 0
    assert bits >= 64 + math.log2(math.factorial(120) / math.factorial(60))


@pytest.mark.parametrize(
    "w, value, scale",
    [
        (1, 19, 19),
        (-1, 7, 19),
        (1j, -11 + 6j, 19),
        (0.5, 7, 7),
    ],
)
def test_evaluate_r2(w, value, scale):
    result = evaluate(rn_coefficients(2), w, precision=64)
    assert complex(result.value) == pytest.approx(value)
    assert float(result.scale) == pytest.approx(scale)


def test_evaluate_uses_argument_precision():
    result = evaluate(rn_coefficients(4), ComplexHP.of(0.25 + 0.5j, 192))
    assert result.value.precision == 192


@pytest.mark.parametrize("n", range(61))
def test_coefficient_ratio_identity(n):
    a = rn_coefficients(n).coeffs
    assert all(a[m + 1] * (m + 1) == a[m] * (n + m + 1) * (n - m) for m in range(n))
    assert a[n] == math.factorial(2 * n) // math.factorial(n)


@pytest.mark.parametrize("precision", [64, 128])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_doubling_precision_changes_little(n, precision):
    rng = np.random.default_rng(1000 * n + precision)
    radii = 10 * np.sqrt(rng.random(20))
    angles = rng.uniform(-np.pi, np.pi, 20)
    for w in radii * np.exp(1j * angles):
        low = evaluate(rn_coefficients(n), complex(w), precision=precision)
        high = evaluate(rn_coefficients(n), complex(w), precision=2 * precision)
        with mp.workprec(4 * precision):
            gap = abs(high.value.value - low.value.value) / high.scale
        assert gap <= mp.mpf(2) ** (-precision + 4)
