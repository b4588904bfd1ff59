from fractions import Fraction

import pytest
from mpmath import mp, mpf

from utils.errors import (
    BranchViolation,
    ConvergenceFailure,
    DisspecError,
    InvalidParameter,
    SchemaMismatch,
)
from utils.numbers import ComplexHP, precision_of, to_mpc, to_mpf


def test_complex_hp_keeps_precision():
    z = ComplexHP.of(Fraction(1, 3), 128)
    assert z.precision == 128
    with mp.workprec(128):
        assert abs(z.re - mpf(1) / 3) < mpf(2) ** -120
    assert z.im == 0


def test_complex_hp_rejects_low_precision():
    with pytest.raises(InvalidParameter):
        ComplexHP(mpf(1), mpf(0), 32)


def test_complex_hp_converts_to_python_complex():
    z = ComplexHP.of(3 - 4j, 64)
    assert complex(z) == 3 - 4j
    assert abs(z) == pytest.approx(5.0)


def test_conversions():
    assert to_mpf(Fraction(1, 4)) == mpf("0.25")
    assert to_mpc(ComplexHP.of(1 + 2j, 64)) == 1 + 2j
    assert precision_of(ComplexHP.of(1, 192), 53) == 192
    assert precision_of(1.5, 77) == 77


def test_located_failure_names_the_mode():
    exc = ConvergenceFailure(2, 1e-3).located(7, "beta")
    assert (exc.n, exc.family, exc.index) == (7, "beta", 2)
    assert "n=7" in str(exc) and "beta" in str(exc)


@pytest.mark.parametrize("error", [BranchViolation, InvalidParameter, SchemaMismatch])
def test_value_errors_share_the_base(error):
    assert issubclass(error, DisspecError)
    assert issubclass(error, ValueError)
