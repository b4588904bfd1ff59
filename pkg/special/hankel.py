"""
special/hankel.py
~~~~~~~~~~~~~~~~~
Spherical Hankel functions of the first kind, h_n(z) = h_n^(1)(z).

Two independent evaluators:
  * hankel_recurrence  – upward three-term recurrence from h_0, h_1
                         (h_n is the dominant solution, so upward is stable);
  * hankel_closed_form – (-i)^(n+1) e^{iz}/z R_n(i/(2z)) via the exact
                         Hankel polynomial.

boundary_residual measures the impedance boundary equation with the
recurrence only, so it certifies roots found from the polynomial side
without sharing any code with it.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc

from config import PRECISION_BITS
from poly.exactpoly import evaluate, rn_coefficients
from utils.errors import InvalidParameter, ZeroArgument
from utils.numbers import ComplexHP, ComplexLike, RealCoefficient, precision_of, to_mpc, to_mpf

SMALL_ARGUMENT = 0.05  # below this |z| the recurrence start-up cancels badly


@dataclass(frozen=True)
class HankelValue:
    n: int
    z: ComplexHP
    h: ComplexHP
    dh: ComplexHP


def _check(n: int, z: mpc) -> None:
    if n < 0:
        raise InvalidParameter(f"order must be non-negative, got {n}")
    if z == 0:
        raise ZeroArgument("spherical Hankel functions are singular at z = 0")


def _wrap(value: mpc, prec: int) -> ComplexHP:
    return ComplexHP(+value.real, +value.imag, prec)


# ---------------------------------------------------------------------------
# Closed form
# ---------------------------------------------------------------------------

def _closed(n: int, z: mpc) -> mpc:
    j = mpc(0, 1)
    rn = evaluate(rn_coefficients(n), j / (2 * z), precision=mp.prec).value.value
    return (-j) ** (n + 1) * mp.exp(j * z) / z * rn


def hankel_closed_form(n: int, z: ComplexLike) -> ComplexHP:
    prec = precision_of(z, PRECISION_BITS)
    with mp.workprec(prec):
        w = to_mpc(z)
        _check(n, w)
        return _wrap(_closed(n, w), prec)


def hankel_closed_form_derivative(n: int, z: ComplexLike) -> ComplexHP:
    """h_n'(z) from closed-form values: h_{n-1} - (n+1)/z h_n (and -h_1 at n = 0)."""
    prec = precision_of(z, PRECISION_BITS)
    with mp.workprec(prec):
        w = to_mpc(z)
        _check(n, w)
        if n == 0:
            return _wrap(-_closed(1, w), prec)
        return _wrap(_closed(n - 1, w) - (n + 1) / w * _closed(n, w), prec)


# ---------------------------------------------------------------------------
# Recurrence
# ---------------------------------------------------------------------------

def _upward(n: int, z: mpc) -> tuple[mpc, mpc]:
    """(h_n, h_n') by upward recurrence."""
    j = mpc(0, 1)
    e = mp.exp(j * z)
    prev = -j * e / z                      # h_0
    curr = -e * (1 / z + j / (z * z))      # h_1
    if n == 0:
        return prev, -curr
    for k in range(1, n):
        prev, curr = curr, (2 * k + 1) / z * curr - prev
    return curr, prev - (n + 1) / z * curr


def hankel_recurrence(n: int, z: ComplexLike) -> HankelValue:
    prec = precision_of(z, PRECISION_BITS)
    with mp.workprec(prec):
        w = to_mpc(z)
        _check(n, w)
        if abs(w) < SMALL_ARGUMENT:
            h = _closed(n, w)
            dh = -_closed(1, w) if n == 0 else _closed(n - 1, w) - (n + 1) / w * h
        else:
            h, dh = _upward(n, w)
        return HankelValue(n=n, z=_wrap(w, prec), h=_wrap(h, prec), dh=_wrap(dh, prec))


# ---------------------------------------------------------------------------
# Impedance boundary equation
# ---------------------------------------------------------------------------

def boundary_residual(n: int, kappa: RealCoefficient, mu: ComplexLike) -> float:
    """Relative residual of (1 - i kappa mu) h_n(mu) + mu h_n'(mu).

    The denominator |h|(1 + kappa|mu|) + |mu h'| shrinks with the
    numerator when e^{i mu} decays, so small h_n cannot fake a pass.
    """
    if n < 1:
        raise InvalidParameter(f"mode index must be ≥ 1, got {n}")
    if kappa <= 0:
        raise InvalidParameter(f"kappa must be positive, got {kappa}")
    prec = precision_of(mu, PRECISION_BITS)
    with mp.workprec(prec):
        m = to_mpc(mu)
        if m == 0:
            raise ZeroArgument("mu must be non-zero")
        if m.imag <= 0:
            raise InvalidParameter("boundary residual needs Im mu > 0")
        value = hankel_recurrence(n, _wrap(m, prec))
        h, dh = value.h.value, value.dh.value
        k = to_mpf(kappa)
        bracket = (1 - mpc(0, 1) * k * m) * h + m * dh
        scale = abs(h) * (1 + k * abs(m)) + abs(m * dh)
        if scale == 0:
            return float("inf")
        return float(abs(bracket) / scale)
