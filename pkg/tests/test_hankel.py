import cmath
import math

import numpy as np
import pytest
from mpmath import mp, mpc

from special.hankel import (
    boundary_residual,
    hankel_closed_form,
    hankel_closed_form_derivative,
    hankel_recurrence,
)
from utils.errors import InvalidParameter, ZeroArgument
from utils.numbers import ComplexHP


def test_h1_at_i():
    value = hankel_recurrence(1, 1j)
    assert complex(value.h) == pytest.approx(2j / math.e, abs=1e-15)
    assert complex(value.h) == pytest.approx(0.7357589j, abs=1e-7)


def test_h0_on_the_real_axis():
    assert complex(hankel_recurrence(0, 1.0).h) == pytest.approx(math.sin(1) - 1j * math.cos(1))


@pytest.mark.parametrize("n", [0, 1, 4, 11])
@pytest.mark.parametrize("z", [2 + 1j, 0.7 - 0.2j, 15j, 3.0])
def test_recurrence_agrees_with_closed_form(n, z):
    arg = ComplexHP.of(z, 160)
    rec = hankel_recurrence(n, arg)
    assert rec.h.precision == 160
    closed = hankel_closed_form(n, arg)
    derivative = hankel_closed_form_derivative(n, arg)
    assert abs(complex(rec.h) - complex(closed)) <= 1e-30 * abs(complex(closed))
    assert abs(complex(rec.dh) - complex(derivative)) <= 1e-30 * abs(complex(derivative))


def test_small_arguments_use_the_closed_form():
    assert complex(hankel_recurrence(3, 0.01).h) == complex(hankel_closed_form(3, 0.01))


@pytest.mark.parametrize("n", [0, 2, 7])
@pytest.mark.parametrize("x", [0.5, 2.0, 9.0])
def test_wronskian_on_the_real_axis(n, x):
    value = hankel_recurrence(n, x)
    w = complex(value.h) * complex(value.dh).conjugate()
    assert w.imag == pytest.approx(-1 / x ** 2, rel=1e-12)


def test_invalid_arguments():
    with pytest.raises(ZeroArgument):
        hankel_recurrence(2, 0)
    with pytest.raises(InvalidParameter):
        hankel_closed_form(-1, 1.0)


def test_boundary_residual_vanishes_at_the_first_eigenvalue():
    with mp.workprec(128):
        w0 = (1 + mp.sqrt(5)) / 4
        mu = ComplexHP.of(mpc(0, 1) / (2 * w0), 128)
    assert boundary_residual(1, 2, mu) < 1e-30


def test_boundary_residual_is_order_one_off_the_spectrum():
    assert boundary_residual(1, 2, 0.3 + 0.9j) > 1e-3


def test_boundary_residual_domain():
    with pytest.raises(InvalidParameter):
        boundary_residual(0, 2, 1j)
    with pytest.raises(InvalidParameter):
        boundary_residual(1, 0, 1j)
    with pytest.raises(InvalidParameter):
        boundary_residual(1, 2, 1 - 1j)
    with pytest.raises(ZeroArgument):
        boundary_residual(1, 2, 0)


def test_closed_form_matches_exponential_factor():
    z = 4 + 0.5j
    expected = -1j * cmath.exp(1j * z) / z
    assert complex(hankel_closed_form(0, z)) == pytest.approx(expected)


RADII = np.geomspace(0.2, 20, 10)
ANGLES = np.linspace(0, np.pi, 10)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 20, 30])
def test_recurrence_matches_closed_form_on_a_polar_grid(n):
    worst = 0.0
    for r in RADII:
        for theta in ANGLES:
            z = complex(r * np.cos(theta), r * np.sin(theta))
            closed = complex(hankel_closed_form(n, z))
            rec = complex(hankel_recurrence(n, z).h)
            worst = max(worst, abs(rec - closed) / abs(closed))
    assert worst <= 1e-10
