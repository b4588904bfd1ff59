"""
utils/numbers.py
~~~~~~~~~~~~~~~~
The ComplexHP carrier and conversions between Python numbers, exact
rationals and mpmath values.

mpmath keeps one global working precision; every helper here that does
arithmetic wraps it in ``mp.workprec`` so callers never leak a precision
change into unrelated code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import mp, mpc, mpf

from utils.errors import InvalidParameter

MIN_PRECISION = 53


@dataclass(frozen=True)
class ComplexHP:
    """A complex value tagged with the binary precision it was computed at."""

    re: mpf
    im: mpf
    precision: int

    def __post_init__(self) -> None:
        if self.precision < MIN_PRECISION:
            raise InvalidParameter(
                f"precision must be at least {MIN_PRECISION} bits, got {self.precision}"
            )

    @classmethod
    def of(cls, value: "ComplexLike", precision: int) -> "ComplexHP":
        with mp.workprec(precision):
            if isinstance(value, ComplexHP):
                z = mpc(value.re, value.im)
            elif isinstance(value, Fraction):
                z = mpc(to_mpf(value), 0)
            else:
                z = mpc(value)
            return cls(+z.real, +z.imag, precision)

    @property
    def value(self) -> mpc:
        return mpc(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))


ComplexLike = Union[ComplexHP, mpc, mpf, complex, float, int, Fraction]
RealCoefficient = Union[int, Fraction, mpf, float]


def to_mpf(c: RealCoefficient) -> mpf:
    """Convert an exact or floating real to mpf at the current precision."""
    if isinstance(c, Fraction):
        return mpf(c.numerator) / mpf(c.denominator)
    return mpf(c)


def to_mpc(value: ComplexLike) -> mpc:
    """Convert any supported complex-like value to mpc at the current precision."""
    if isinstance(value, ComplexHP):
        return mpc(value.re, value.im)
    if isinstance(value, Fraction):
        return mpc(to_mpf(value), 0)
    return mpc(value)


def precision_of(value: ComplexLike, default: int) -> int:
    """Working precision carried by a value, or ``default`` for plain numbers."""
    if isinstance(value, ComplexHP):
        return value.precision
    return default


def as_complex(value: ComplexLike) -> complex:
    return complex(value)
