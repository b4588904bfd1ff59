"""
poly/exactpoly.py
~~~~~~~~~~~~~~~~~
Hankel polynomials R_n with exact integer coefficients.

    R_n(w) = sum_{m=0}^{n} a_m w^m,   a_m = (n+m)! / (m! (n-m)!)

Coefficients are Python ints (a_30 is already ~3e49) and are only turned
into mpmath floats at evaluation time, at the precision of the argument.
Polynomials are plain coefficient sequences in ascending powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from mpmath import mp, mpc, mpf

from utils.errors import InvalidParameter
from utils.numbers import ComplexHP, ComplexLike, RealCoefficient, precision_of, to_mpc, to_mpf

Coefficients = Sequence[RealCoefficient]


@dataclass(frozen=True)
class RnPolynomial:
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise InvalidParameter(f"R_{self.n} needs {self.n + 1} coefficients, got {len(self.coeffs)}")
        if self.coeffs[0] != 1 or any(a <= 0 for a in self.coeffs):
            raise InvalidParameter(f"R_{self.n} coefficients must start at 1 and stay positive")
        n = self.n
        for m in range(n):
            if self.coeffs[m + 1] * (m + 1) != self.coeffs[m] * (n + m + 1) * (n - m):
                raise InvalidParameter(f"R_{n} ratio identity broken at m={m}")

    @property
    def degree(self) -> int:
        return self.n

    @property
    def leading(self) -> int:
        return self.coeffs[-1]


class Evaluation(NamedTuple):
    value: ComplexHP
    scale: mpf  # sum |a_m| |w|^m, the denominator of relative residuals


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def rn_coefficients(n: int) -> RnPolynomial:
    """Exact coefficients of R_n from the integer ratio recurrence."""
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}")
    coeffs = [1]
    for m in range(n):
        # a_{m+1} (m+1) = a_m (n+m+1)(n-m); the division is always exact
        coeffs.append(coeffs[m] * (n + m + 1) * (n - m) // (m + 1))
    return RnPolynomial(n, tuple(coeffs))


def derivative(p: RnPolynomial | Coefficients) -> tuple:
    """Formal derivative; constants map to the zero polynomial ``(0,)``."""
    coeffs = p.coeffs if isinstance(p, RnPolynomial) else tuple(p)
    if not coeffs:
        raise InvalidParameter("polynomial has no coefficients")
    if len(coeffs) == 1:
        return (coeffs[0] * 0,)
    return tuple(m * coeffs[m] for m in range(1, len(coeffs)))


def default_precision(n: int) -> int:
    """Working precision (bits) that leaves headroom for log2((2n)!/n!)."""
    if n <= 20:
        return 128
    if n <= 40:
        return 256
    spread = math.lgamma(2 * n + 1) - math.lgamma(n + 1)
    bits = 64 + math.ceil(spread / math.log(2))
    return 64 * math.ceil(bits / 64)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def evaluate(p: RnPolynomial | Coefficients, w: ComplexLike, precision: int | None = None) -> Evaluation:
    """Horner evaluation at the precision carried by ``w``.

    Plain Python/mpmath arguments are evaluated at ``precision`` (or the
    current mpmath precision when that is omitted too).
    """
    coeffs = p.coeffs if isinstance(p, RnPolynomial) else tuple(p)
    prec = precision or precision_of(w, mp.prec)
    with mp.workprec(prec):
        z = to_mpc(w)
        r = abs(z)
        acc = mpc(0)
        scale = mpf(0)
        for c in reversed(coeffs):
            c = to_mpf(c)
            acc = acc * z + c
            scale = scale * r + abs(c)
        return Evaluation(ComplexHP(+acc.real, +acc.imag, prec), +scale)


def evaluate_with_derivative(coeffs: Coefficients, z: mpc) -> tuple[mpc, mpc]:
    """p(z) and p'(z) in one Horner pass at the current mpmath precision."""
    p = mpc(0)
    dp = mpc(0)
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp
