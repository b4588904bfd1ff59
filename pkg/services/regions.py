"""
services/regions.py
~~~~~~~~~~~~~~~~~~~
Where eigenvalues are allowed to live, and the semiclassical contours
that map onto those regions.

    Λ_ε   |Re λ| ≤ C_ε (|Im λ|^{1/2+ε} + 1),  Re λ < 0
    R_N   |Im λ| ≤ C_N (|Re λ| + 1)^{-N},      Re λ < 0
    M     |λ| ≥ R₀,  |arg λ - π| ≤ π/4
    M_δ₀  |λ| ≥ R₀,  |arg λ - π| ≤ arctan δ₀

Spectral points and contour points are linked by λ = i√z/h, with √z the
branch taking the upper half-plane onto the first quadrant.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from mpmath import mp, mpc, mpf

from config import PRECISION_BITS, logger
from services.checks import CheckResult, Report
from services.spectrum import Eigenvalue
from utils.errors import BranchViolation, EmptyInput, InvalidParameter
from utils.numbers import ComplexHP, ComplexLike, precision_of, to_mpc

ARG_TOL        = 1e-12
FIT_SLACK      = 1e-12
ROUND_TRIP_TOL = 1e-12


class Contour(str, Enum):
    Z1 = "z1"
    Z2 = "z2"
    Z3 = "z3"


# ---------------------------------------------------------------------------
# Region specs
# ---------------------------------------------------------------------------

def _positive(name: str, value: float) -> None:
    if not value > 0:
        raise InvalidParameter(f"{name} must be positive, got {value}")


def _check_eps(eps: float) -> None:
    if not 0 < eps < 0.5:
        raise InvalidParameter(f"eps must lie in (0, 1/2), got {eps}")


def _check_order(n: int) -> None:
    if n < 1:
        raise InvalidParameter(f"N must be at least 1, got {n}")


@dataclass(frozen=True)
class LambdaEps:
    eps: float
    c_eps: float

    def __post_init__(self) -> None:
        _check_eps(self.eps)
        _positive("C_eps", self.c_eps)


@dataclass(frozen=True)
class RN:
    n: int
    c_n: float

    def __post_init__(self) -> None:
        _check_order(self.n)
        _positive("C_N", self.c_n)


@dataclass(frozen=True)
class M:
    r0: float

    def __post_init__(self) -> None:
        _positive("R0", self.r0)


@dataclass(frozen=True)
class MDelta:
    delta0: float
    r0: float

    def __post_init__(self) -> None:
        _positive("delta0", self.delta0)
        _positive("R0", self.r0)


RegionSpec = Union[LambdaEps, RN, M, MDelta]


def _arg_gap(lam: complex) -> float:
    """|arg λ - π| with arg in (-π, π], folded so conjugates agree."""
    return math.pi - abs(math.atan2(lam.imag, lam.real))


def _sector(lam: complex, r0: float, half_angle: float) -> bool:
    return abs(lam) >= r0 and _arg_gap(lam) <= half_angle + ARG_TOL


def in_region(lam: ComplexLike | Eigenvalue, region: RegionSpec) -> bool:
    """Membership by direct evaluation of the defining inequalities."""
    z = _as_complex(lam)
    if z.real >= 0:
        return False
    if isinstance(region, LambdaEps):
        return abs(z.real) <= region.c_eps * (abs(z.imag) ** (0.5 + region.eps) + 1)
    if isinstance(region, RN):
        return abs(z.imag) <= region.c_n * (abs(z.real) + 1) ** (-region.n)
    if isinstance(region, M):
        return _sector(z, region.r0, math.pi / 4)
    if isinstance(region, MDelta):
        return _sector(z, region.r0, math.atan(region.delta0))
    raise InvalidParameter(f"unknown region {region!r}")


def _as_complex(value: ComplexLike | Eigenvalue) -> complex:
    if isinstance(value, Eigenvalue):
        return value.value
    return complex(value)


# ---------------------------------------------------------------------------
# Change of variables
# ---------------------------------------------------------------------------

def lambda_to_z(lam: ComplexLike, h: float) -> ComplexHP:
    """z = -λ² h², defined on Re λ ≤ 0, Im λ ≥ 0."""
    _positive("h", h)
    prec = precision_of(lam, PRECISION_BITS)
    with mp.workprec(prec):
        value = to_mpc(lam)
        if value.real > 0 or value.imag < 0:
            raise BranchViolation(f"lambda = {complex(value)} is outside Re <= 0, Im >= 0")
        z = -(value * value) * mpf(h) ** 2
        return ComplexHP(+z.real, +z.imag, prec)


def z_to_lambda(z: ComplexLike, h: float) -> ComplexHP:
    """λ = i√z/h for Im z ≥ 0, principal square root."""
    _positive("h", h)
    prec = precision_of(z, PRECISION_BITS)
    with mp.workprec(prec):
        value = to_mpc(z)
        if value.imag < 0:
            raise BranchViolation(f"z = {complex(value)} is below the real axis")
        lam = mpc(0, 1) * mp.sqrt(value) / mpf(h)
        return ComplexHP(+lam.real, +lam.imag, prec)


# ---------------------------------------------------------------------------
# Contours
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContourPoint:
    contour: Contour
    z: ComplexHP
    h: float
    delta: float


def delta_for_eps(eps: float) -> float:
    """Contour exponent matched to Λ_ε: δ = 1/2 - ε."""
    _check_eps(eps)
    return 0.5 - eps


def parse_contour(contour: Contour | str) -> Contour:
    try:
        return Contour(contour)
    except ValueError:
        raise InvalidParameter(f"unknown contour {contour!r}; expected z1, z2 or z3") from None


def contour_endpoints(contour: Contour | str, h: float, delta: float, delta0: float = 1.0) -> tuple[complex, complex]:
    contour = parse_contour(contour)
    if contour is Contour.Z1:
        return complex(1, h ** delta), complex(1, 1)
    if contour is Contour.Z2:
        return complex(-1, 0), complex(-1, 1)
    return complex(-1, delta0), complex(1, delta0)


def check_contour_args(h: float, delta: float, count: int, delta0: float) -> None:
    if not 0 < h < 1:
        raise InvalidParameter(f"h must lie in (0, 1), got {h}")
    if not 0 < delta < 0.5:
        raise InvalidParameter(f"delta must lie in (0, 1/2), got {delta}")
    if count < 2:
        raise InvalidParameter(f"count must be at least 2, got {count}")
    _positive("delta0", delta0)


def sample_contour(contour: Contour | str, h: float, delta: float, count: int,
                   delta0: float = 1.0) -> list[ContourPoint]:
    """Evenly spaced points along Z1, Z2 or Z3 (at height δ₀), endpoints included."""
    contour = parse_contour(contour)
    check_contour_args(h, delta, count, delta0)
    with mp.workprec(PRECISION_BITS):
        if contour is Contour.Z1:
            start, stop = mpc(1, mpf(h) ** mpf(delta)), mpc(1, 1)
        elif contour is Contour.Z2:
            start, stop = mpc(-1, 0), mpc(-1, 1)
        else:
            start, stop = mpc(-1, delta0), mpc(1, delta0)
        points = []
        for k in range(count):
            z = start + (stop - start) * k / (count - 1)
            points.append(ContourPoint(contour, ComplexHP(+z.real, +z.imag, PRECISION_BITS), h, delta))
    return points


def contour_image(points: Iterable[ContourPoint], h: float | None = None) -> list[ComplexHP]:
    """λ = i√z/h along sampled contour points (each point's own h unless given)."""
    return [z_to_lambda(p.z, h if h is not None else p.h) for p in points]


# ---------------------------------------------------------------------------
# Constant fitting
# ---------------------------------------------------------------------------

def _needs(z: complex, eps: float, order: int) -> tuple[float, float]:
    need_eps = abs(z.real) / (abs(z.imag) ** (0.5 + eps) + 1)
    need_n = abs(z.imag) * (abs(z.real) + 1) ** order
    return need_eps, need_n


def fit_constants(eigs: Iterable[ComplexLike | Eigenvalue], eps: float, N: int) -> tuple[float, float]:
    """Smallest (C_ε, C_N) putting every eigenvalue in Λ_ε ∪ R_N.

    Each eigenvalue goes to whichever region needs the smaller constant
    (ties to R_N); a region with nothing assigned gets 0.
    """
    _check_eps(eps)
    _check_order(N)
    values = [_as_complex(e) for e in eigs]
    if not values:
        raise EmptyInput("fit_constants needs at least one eigenvalue")
    c_eps = c_n = 0.0
    for z in values:
        if not z.real < 0:
            raise InvalidParameter(f"eigenvalue {z} is not in Re < 0")
        need_eps, need_n = _needs(z, eps, N)
        if need_n <= need_eps:
            c_n = max(c_n, need_n)
        else:
            c_eps = max(c_eps, need_eps)
    logger.debug("fit eps=%s N=%d over %d eigenvalues: C_eps=%.6g C_N=%.6g", eps, N, len(values), c_eps, c_n)
    return c_eps, c_n


def _usable(c: float) -> float:
    return max(c, sys.float_info.min) * (1 + FIT_SLACK)


def fitted_regions(eigs: Iterable[ComplexLike | Eigenvalue], eps: float, N: int) -> tuple[LambdaEps, RN]:
    """Region specs from fit_constants, made strictly positive and slightly widened."""
    c_eps, c_n = fit_constants(eigs, eps, N)
    return LambdaEps(eps, _usable(c_eps)), RN(N, _usable(c_n))


def in_union(lam: ComplexLike | Eigenvalue, regions: Iterable[RegionSpec]) -> bool:
    return any(in_region(lam, region) for region in regions)


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

def _round_trip_error(e: Eigenvalue, h: float) -> float:
    with mp.workprec(e.lambda_.precision):
        back = z_to_lambda(lambda_to_z(e.lambda_, h), h).value
        lam = e.lambda_.value
        return float(abs(back - lam) / abs(lam))


def verify_regions(eigs: list[Eigenvalue], eps: float, N: int, h: float = 0.5) -> Report:
    report = Report("regions", {"eps": eps, "N": N})
    names = ("union_membership_total", "constants_monotone", "lambda_z_round_trip", "real_in_rn")
    if not eigs:
        for name in names:
            report.add(CheckResult.skipped(name, "empty spectrum"))
        return report

    lam_eps, rn = fitted_regions(eigs, eps, N)
    report.params.update(c_eps=lam_eps.c_eps, c_n=rn.c_n, eigenvalues=len(eigs))

    outside = [e for e in eigs if not in_union(e, (lam_eps, rn))]
    report.add(CheckResult.judge("union_membership_total", not outside, margin=float(-len(outside)),
                                 detail=f"C_eps = {lam_eps.c_eps:.17g}, C_N = {rn.c_n:.17g}"))

    wider = (LambdaEps(eps, 2 * lam_eps.c_eps), RN(N, 2 * rn.c_n))
    lost = [e for e in eigs if in_union(e, (lam_eps, rn)) and not in_union(e, wider)]
    report.add(CheckResult.judge("constants_monotone", not lost, detail="doubling both constants"))

    upper = [e for e in eigs if e.value.imag >= 0]
    worst = max((_round_trip_error(e, h) for e in upper), default=0.0)
    report.add(CheckResult.judge("lambda_z_round_trip", worst <= ROUND_TRIP_TOL, margin=ROUND_TRIP_TOL - worst,
                                 detail=f"{len(upper)} upper-quadrant eigenvalues, h = {h}"))

    real = [e for e in eigs if e.is_real]
    stray = [e for e in real if not in_region(e, rn)]
    report.add(CheckResult.judge("real_in_rn", not stray,
                                 detail=f"{len(real)} real eigenvalues, {len(stray)} outside R_N"))

    logger.info("regions suite eps=%s N=%d: %s", eps, N, "PASS" if report.passed else "FAIL")
    return report
