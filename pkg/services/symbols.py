"""
services/symbols.py
~~~~~~~~~~~~~~~~~~~
Boundary symbols on the semiclassical contours.

    ρ = sqrt(z - r0)      (Im ρ ≥ 0)
    c = ρ - γ √z
    d = ρ - √z / γ

For the unit sphere with constant γ the symbols depend on (x', ξ') only
through r0 ≥ 0, so a scan is a grid over (contour point, r0). Values are
double precision; grids are numpy arrays indexed [z, r0].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from config import logger
from services.checks import CheckResult, Report
from services.regions import Contour, check_contour_args, contour_endpoints, parse_contour
from utils.errors import InvalidGamma, InvalidParameter
from utils.numbers import ComplexHP, ComplexLike, MIN_PRECISION

R0_MAX_DEFAULT = 25.0
GRID_DEFAULT   = 200
RHO_REL_TOL    = 1e-14
GLANCING_TOL   = 1e-2
Z1_R0_LIMIT    = 10.0


class Symbol(str, Enum):
    C = "c"
    D = "d"


# ---------------------------------------------------------------------------
# Kernels (broadcasting over numpy arrays)
# ---------------------------------------------------------------------------

def rho_array(r0, z) -> np.ndarray:
    """sqrt(z - r0) on the branch Im ≥ 0."""
    root = np.sqrt(np.asarray(z, dtype=np.complex128) - np.asarray(r0, dtype=np.float64))
    return np.where(root.imag < 0, -root, root)


def branch_boundary_array(r0, z) -> np.ndarray:
    """True where z - r0 is a positive real (ρ real, branch undetermined)."""
    w = np.asarray(z, dtype=np.complex128) - np.asarray(r0, dtype=np.float64)
    return (w.imag == 0) & (w.real > 0)


def c_array(r0, z, gamma: float) -> np.ndarray:
    return rho_array(r0, z) - gamma * np.sqrt(np.asarray(z, dtype=np.complex128))


def d_array(r0, z, gamma: float) -> np.ndarray:
    return rho_array(r0, z) - np.sqrt(np.asarray(z, dtype=np.complex128)) / gamma


def _check_gamma(gamma: float) -> None:
    if not gamma > 0:
        raise InvalidGamma(f"gamma must be positive, got {gamma}")


def _check_r0(r0: float) -> None:
    if not r0 >= 0:
        raise InvalidParameter(f"r0 must be non-negative, got {r0}")


def _hp(value: np.ndarray | complex) -> ComplexHP:
    return ComplexHP.of(complex(value), MIN_PRECISION)


# ---------------------------------------------------------------------------
# Pointwise evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolSample:
    r0: float
    z: ComplexHP
    rho: ComplexHP
    c: ComplexHP
    d: ComplexHP
    gamma: float
    branch_boundary: bool = False


def eval_rho(r0: float, z: ComplexLike) -> ComplexHP:
    _check_r0(r0)
    return _hp(rho_array(r0, complex(z)))


def eval_c(r0: float, z: ComplexLike, gamma: float) -> ComplexHP:
    _check_r0(r0)
    _check_gamma(gamma)
    return _hp(c_array(r0, complex(z), gamma))


def eval_d(r0: float, z: ComplexLike, gamma: float) -> ComplexHP:
    _check_r0(r0)
    _check_gamma(gamma)
    return _hp(d_array(r0, complex(z), gamma))


def sample_symbols(r0: float, z: ComplexLike, gamma: float) -> SymbolSample:
    _check_r0(r0)
    _check_gamma(gamma)
    w = complex(z)
    boundary = bool(branch_boundary_array(r0, w))
    if boundary:
        logger.debug("z - r0 = %s is a positive real; rho taken as the non-negative root", w - r0)
    return SymbolSample(
        r0=r0,
        z=_hp(w),
        rho=_hp(rho_array(r0, w)),
        c=_hp(c_array(r0, w, gamma)),
        d=_hp(d_array(r0, w, gamma)),
        gamma=gamma,
        branch_boundary=boundary,
    )


def glancing_r0(gamma: float) -> float | None:
    """r0* = 1/γ² - 1 where d vanishes at z = -1; only for 0 < γ < 1."""
    _check_gamma(gamma)
    if gamma < 1:
        return 1 / gamma ** 2 - 1
    return None


# ---------------------------------------------------------------------------
# Grid scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanGrid:
    gamma: float
    contour: Contour
    r0: np.ndarray       # (grid,)
    z: np.ndarray        # (grid,)
    abs_c: np.ndarray    # (grid, grid), [z, r0]
    abs_d: np.ndarray
    im_rho: np.ndarray

    @property
    def step_r0(self) -> float:
        return float(self.r0[1] - self.r0[0])

    @property
    def step_z(self) -> float:
        return float(abs(self.z[1] - self.z[0]))

    def values(self, symbol: Symbol | str) -> np.ndarray:
        return self.abs_c if Symbol(symbol) is Symbol.C else self.abs_d

    def rows(self) -> Iterator[tuple[float, float, float, float, float, float]]:
        """(r0, Re z, Im z, |c|, |d|, Im ρ), z outer, r0 inner."""
        for i, z in enumerate(self.z):
            for j, r0 in enumerate(self.r0):
                yield (float(r0), float(z.real), float(z.imag),
                       float(self.abs_c[i, j]), float(self.abs_d[i, j]), float(self.im_rho[i, j]))


@dataclass(frozen=True)
class ScanMinimum:
    symbol: Symbol
    value: float
    r0: float
    z: complex


def scan_grid(gamma: float, contour: Contour | str, h: float, delta: float,
              r0_max: float = R0_MAX_DEFAULT, grid: int = GRID_DEFAULT, delta0: float = 1.0) -> ScanGrid:
    contour = parse_contour(contour)
    _check_gamma(gamma)
    check_contour_args(h, delta, grid, delta0)
    if not r0_max > 0:
        raise InvalidParameter(f"r0_max must be positive, got {r0_max}")

    start, stop = contour_endpoints(contour, h, delta, delta0)
    zs = np.linspace(start, stop, grid)
    r0s = np.linspace(0.0, r0_max, grid)
    Z, R = np.meshgrid(zs, r0s, indexing="ij")
    rho = rho_array(R, Z)
    root_z = np.sqrt(Z)
    return ScanGrid(
        gamma=gamma,
        contour=contour,
        r0=r0s,
        z=zs,
        abs_c=np.abs(rho - gamma * root_z),
        abs_d=np.abs(rho - root_z / gamma),
        im_rho=rho.imag,
    )


def grid_minimum(scan: ScanGrid, symbol: Symbol | str) -> ScanMinimum:
    """Grid minimum of |symbol|; ties go to the smallest (r0, Im z, Re z)."""
    symbol = Symbol(symbol)
    values = scan.values(symbol)
    low = values.min()
    cells = np.argwhere(values == low)
    i, j = min(cells, key=lambda ij: (scan.r0[ij[1]], scan.z[ij[0]].imag, scan.z[ij[0]].real))
    return ScanMinimum(symbol, float(low), float(scan.r0[j]), complex(scan.z[i]))


def scan_min_modulus(symbol: Symbol | str, gamma: float, contour: Contour | str, h: float, delta: float,
                     r0_max: float = R0_MAX_DEFAULT, grid: int = GRID_DEFAULT, delta0: float = 1.0) -> ScanMinimum:
    try:
        symbol = Symbol(symbol)
    except ValueError:
        raise InvalidParameter(f"unknown symbol {symbol!r}; expected c or d") from None
    return grid_minimum(scan_grid(gamma, contour, h, delta, r0_max, grid, delta0), symbol)


def im_rho_lower_bound(r0, z) -> np.ndarray:
    """Im z / (2 sqrt(1 + r0 + |z|)), a floor for Im ρ when Im z ≥ 0."""
    z = np.asarray(z, dtype=np.complex128)
    return z.imag / (2 * np.sqrt(1 + np.asarray(r0, dtype=np.float64) + np.abs(z)))


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

def _rho_identity_error(scan: ScanGrid) -> float:
    Z, R = np.meshgrid(scan.z, scan.r0, indexing="ij")
    rho = rho_array(R, Z)
    return float(np.max(np.abs(rho * rho + R - Z) / (np.abs(Z) + R)))


def _check_glancing(gamma: float, z2: ScanGrid) -> CheckResult:
    found = grid_minimum(z2, Symbol.D)
    r0_star = glancing_r0(gamma)
    if r0_star is None:
        floor = (1 - 1 / gamma) / 2
        return CheckResult.judge("glancing_absent", found.value >= floor, margin=found.value - floor,
                                 detail=f"min |d| on Z2 = {found.value:.6g}")
    if r0_star > z2.r0[-1]:
        return CheckResult.skipped("glancing_located", f"r0* = {r0_star:.6g} beyond r0_max")
    # z = -1 is a grid point of Z2; along it |d| = |sqrt(1 + r0) - 1/gamma|
    resolution = z2.step_r0 / (2 * math.sqrt(1 + r0_star))
    if resolution >= GLANCING_TOL:
        return CheckResult.skipped(
            "glancing_located",
            f"r0 step {z2.step_r0:.6g} resolves |d| only to {resolution:.3g}; need < {GLANCING_TOL:g}",
        )
    distance = abs(found.r0 - r0_star) + abs(found.z + 1)
    ok = found.value < GLANCING_TOL and distance <= z2.step_r0 + z2.step_z
    return CheckResult.judge(
        "glancing_located", ok, margin=GLANCING_TOL - found.value,
        detail=f"min |d| = {found.value:.6g} at r0 = {found.r0:.6g}, z = {found.z}; r0* = {r0_star:.6g}",
    )


def verify_symbols(gamma: float, h: float, delta: float, r0_max: float = R0_MAX_DEFAULT,
                   grid: int = GRID_DEFAULT, delta0: float = 1.0) -> Report:
    report = Report("symbols", {"gamma": gamma, "h": h, "delta": delta, "r0_max": r0_max, "grid": grid})
    scans = {c: scan_grid(gamma, c, h, delta, r0_max, grid, delta0) for c in Contour}

    worst = max(_rho_identity_error(s) for s in scans.values())
    report.add(CheckResult.judge("rho_identity", worst <= RHO_REL_TOL, margin=RHO_REL_TOL - worst,
                                 detail=f"max |rho^2 + r0 - z| / (|z| + r0) = {worst:.3e}"))

    lowest = min(float(s.im_rho.min()) for s in scans.values())
    report.add(CheckResult.judge("im_rho_nonnegative", lowest >= 0, margin=lowest))

    z1 = scans[Contour.Z1]
    Z, R = np.meshgrid(z1.z, z1.r0, indexing="ij")
    keep = R <= Z1_R0_LIMIT
    slack = float(np.min((z1.im_rho - im_rho_lower_bound(R, Z))[keep]))
    report.add(CheckResult.judge("im_rho_lower_bound_z1", slack >= 0, margin=slack,
                                 detail=f"r0 <= {Z1_R0_LIMIT:g}, min Im z = {z1.z[0].imag:.6g}"))

    elliptic = ("glancing_located" if gamma < 1 else "glancing_absent", "c_elliptic_z2", "d_elliptic_z1_z3")
    if gamma == 1:
        for name in elliptic:
            report.add(CheckResult.skipped(name, "gamma = 1: the symbols degenerate"))
        return report

    report.add(_check_glancing(gamma, scans[Contour.Z2]))

    if gamma < 1:
        c_min = grid_minimum(scans[Contour.Z2], Symbol.C)
        floor = (1 - gamma) / 2
        report.add(CheckResult.judge("c_elliptic_z2", c_min.value >= floor, margin=c_min.value - floor,
                                     detail=f"min |c| = {c_min.value:.6g} at r0 = {c_min.r0:.6g}"))
    else:
        report.add(CheckResult.skipped("c_elliptic_z2", "c is elliptic on Z2 only for gamma < 1"))

    d_min = min((grid_minimum(scans[c], Symbol.D) for c in (Contour.Z1, Contour.Z3)), key=lambda m: m.value)
    report.add(CheckResult.judge("d_elliptic_z1_z3", d_min.value > 0, margin=d_min.value,
                                 detail=f"min |d| = {d_min.value:.6g} at r0 = {d_min.r0:.6g}, z = {d_min.z}"))

    logger.info("symbols suite gamma=%s: %s", gamma, "PASS" if report.passed else "FAIL")
    return report
