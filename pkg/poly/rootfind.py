"""
poly/rootfind.py
~~~~~~~~~~~~~~~~
All complex roots of a real-coefficient polynomial, each certified by a
relative residual.

Pipeline (one Aberth–Ehrlich solve in three precisions):
  1. seeds   – vectorised Aberth sweeps in double precision (numpy), started
               on a perturbed circle whose radius is the Fujiwara bound;
  2. polish  – Gauss–Seidel Aberth sweeps at the working precision (mpmath);
  3. refine  – per-root Newton at twice the working precision, followed by
               conjugate-pair symmetrisation and real-root snapping.

Coefficients are normalised by their largest modulus before any iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpc, mpf

from config import PRECISION_BITS, REAL_TOL, logger
from poly.exactpoly import Coefficients, RnPolynomial, evaluate_with_derivative
from utils.errors import ConvergenceFailure, InvalidParameter
from utils.numbers import ComplexHP, MIN_PRECISION, to_mpf

_SEED_SWEEPS = 500
_SEED_ANGLE  = 0.25   # breaks the symmetry of the start circle about the real axis
_STALL_BELOW = 2.0 ** -30


@dataclass(frozen=True)
class RootOptions:
    precision: int = PRECISION_BITS
    tol: float | None = None
    real_tol: float = REAL_TOL
    max_newton: int = 100
    max_sweeps: int = 200

    def __post_init__(self) -> None:
        if self.precision < MIN_PRECISION:
            raise InvalidParameter(f"precision must be at least {MIN_PRECISION} bits")
        if self.tol is not None and self.tol <= 0:
            raise InvalidParameter("tol must be positive")

    def acceptance(self) -> mpf:
        """Largest relative residual a certified root may carry."""
        with mp.workprec(2 * self.precision):
            if self.tol is not None:
                return mpf(self.tol)
            return mpf(2) ** -(self.precision - 8)

    def doubled(self) -> "RootOptions":
        return RootOptions(
            precision=2 * self.precision,
            tol=self.tol,
            real_tol=self.real_tol,
            max_newton=self.max_newton,
            max_sweeps=self.max_sweeps,
        )


@dataclass(frozen=True)
class CertifiedRoot:
    w: ComplexHP
    residual_rel: float
    is_real: bool
    refined_precision: int

    def __complex__(self) -> complex:
        return complex(self.w)


# ---------------------------------------------------------------------------
# Public entry point
# ---------------------------------------------------------------------------

def find_all_roots(p: RnPolynomial | Coefficients, opts: RootOptions | None = None) -> list[CertifiedRoot]:
    """Return deg(p) certified roots sorted by (Re, Im).

    Raises ConvergenceFailure when a root's relative residual stays above
    the acceptance tolerance after refinement.
    """
    opts   = opts or RootOptions()
    coeffs = tuple(p.coeffs if isinstance(p, RnPolynomial) else p)
    degree = len(coeffs) - 1
    if degree < 1:
        raise InvalidParameter("root finding needs a polynomial of degree ≥ 1")
    if coeffs[-1] == 0:
        raise InvalidParameter("leading coefficient must be non-zero")

    prec = opts.precision
    with mp.workprec(prec):
        normalised = _normalise(coeffs)
        seeds      = _double_precision_seeds(normalised)
        polished, sweeps = _aberth_polish(normalised, seeds, opts.max_sweeps)

    refined_prec = 2 * prec
    with mp.workprec(refined_prec):
        normalised = _normalise(coeffs)
        refined    = [_newton(normalised, z, opts.max_newton) for z in polished]
        roots      = _symmetrise(refined, opts.real_tol)
        roots.sort(key=lambda z: (z.real, z.imag))

        limit  = opts.acceptance()
        result = []
        for index, z in enumerate(roots):
            residual = _relative_residual(normalised, z)
            if residual > limit:
                raise ConvergenceFailure(index, float(residual))
            result.append(CertifiedRoot(
                w=ComplexHP(+z.real, +z.imag, refined_prec),
                residual_rel=float(residual),
                is_real=(z.imag == 0),
                refined_precision=refined_prec,
            ))

    logger.debug("find_all_roots: degree %d, %d real roots, precision %d, %d polish sweeps", degree,
                 sum(r.is_real for r in result), prec, sweeps)
    return result


def real_roots(roots: list[CertifiedRoot]) -> list[CertifiedRoot]:
    return [r for r in roots if r.is_real]


# ---------------------------------------------------------------------------
# Stages
# ---------------------------------------------------------------------------

def _normalise(coeffs: Coefficients) -> list[mpf]:
    values = [to_mpf(c) for c in coeffs]
    biggest = max(abs(v) for v in values)
    return [v / biggest for v in values]


def _fujiwara_radius(coeffs: list[float]) -> float:
    """Fujiwara upper bound on the moduli of all roots (ascending coefficients)."""
    d    = len(coeffs) - 1
    lead = abs(coeffs[-1])
    terms = [(abs(coeffs[d - k]) / lead) ** (1.0 / k) for k in range(1, d)]
    terms.append((abs(coeffs[0]) / (2.0 * lead)) ** (1.0 / d))
    bound = 2.0 * max(terms) if terms else 0.0
    return bound if bound > 0 else 1.0


def _start_circle(radius: float, degree: int) -> np.ndarray:
    k = np.arange(degree)
    angles = 2.0 * np.pi * k / degree + _SEED_ANGLE
    return radius * (1.0 + 0.01 * k / degree) * np.exp(1j * angles)


def _double_precision_seeds(coeffs: list[mpf]) -> list[mpc]:
    floats = [float(c) for c in coeffs]
    degree = len(floats) - 1
    start  = _start_circle(_fujiwara_radius(floats), degree)

    desc  = np.array(floats[::-1], dtype=float)
    ddesc = np.polyder(desc)
    z = start.copy()
    with np.errstate(all="ignore"):
        for _ in range(_SEED_SWEEPS):
            ratio = np.polyval(desc, z) / np.polyval(ddesc, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
            if not np.all(np.isfinite(step)):
                logger.debug("double-precision seeding diverged; using the start circle")
                z = start
                break
            z = z - step
            if np.all(np.abs(step) <= 1e-14 * (1.0 + np.abs(z))):
                break
    return _separate([mpc(complex(s)) for s in z])


def _separate(points: list[mpc]) -> list[mpc]:
    """Nudge coincident seeds apart; Aberth divides by their differences."""
    out: list[mpc] = []
    for k, z in enumerate(points):
        while any(abs(z - other) <= mpf(2) ** (-40) * (1 + abs(z)) for other in out):
            z = z * (1 + mpc(1e-6, 1e-6) * (k + 1)) + mpc(1e-9, 1e-9)
        out.append(z)
    return out


def _aberth_polish(coeffs: list[mpf], seeds: list[mpc], max_sweeps: int) -> tuple[list[mpc], int]:
    """Aberth sweeps until the relative step reaches half the working precision.

    The last digits are left to Newton at doubled precision. Sweeps also stop
    once the step has stopped shrinking for two sweeps in a row.
    """
    z        = list(seeds)
    stop     = mpf(2) ** -(mp.prec // 2)
    previous = None
    stalled  = 0
    for sweep in range(1, max_sweeps + 1):
        worst = mpf(0)
        for k in range(len(z)):
            p, dp = evaluate_with_derivative(coeffs, z[k])
            if p == 0:
                continue
            if dp == 0:
                z[k] = z[k] * (1 + stop) + stop
                worst = mpf(1)
                continue
            ratio = p / dp
            repulsion = mp.fsum(1 / (z[k] - z[j]) for j in range(len(z)) if j != k)
            step = ratio / (1 - ratio * repulsion)
            z[k] -= step
            worst = max(worst, abs(step) / (1 + abs(z[k])))
        if worst <= stop:
            logger.debug("Aberth polish converged after %d sweeps", sweep)
            return z, sweep
        if previous is not None and worst <= _STALL_BELOW and worst >= previous / 2:
            stalled += 1
        else:
            stalled = 0
        if stalled >= 2:
            logger.debug("Aberth polish stalled at step %.3e after %d sweeps", float(worst), sweep)
            return z, sweep
        previous = worst
    return z, max_sweeps


def _newton(coeffs: list[mpf], z: mpc, max_iter: int) -> mpc:
    z    = mpc(z)
    tiny = mpf(2) ** -(mp.prec - 4)
    for _ in range(max_iter):
        p, dp = evaluate_with_derivative(coeffs, z)
        if p == 0 or dp == 0:
            break
        step = p / dp
        z -= step
        if abs(step) <= tiny * (1 + abs(z)):
            break
    return z


def _is_real(z: mpc, real_tol: float) -> bool:
    return abs(z.imag) <= real_tol * (1 + abs(z))


def _symmetrise(roots: list[mpc], real_tol: float) -> list[mpc]:
    """Snap near-real roots onto the axis and average conjugate partners."""
    lower = [z for z in roots if not _is_real(z, real_tol) and z.imag < 0]
    out: list[mpc] = []
    for z in roots:
        if _is_real(z, real_tol):
            out.append(mpc(z.real, 0))
            continue
        if z.imag < 0:
            continue
        if lower:
            partner = min(lower, key=lambda w: abs(w - mp.conj(z)))
            lower.remove(partner)
            mean = (z + mp.conj(partner)) / 2
            out.extend([mean, mp.conj(mean)])
        else:
            out.append(z)
    out.extend(lower)  # unpaired lower roots; certification still applies
    return out


def _relative_residual(coeffs: list[mpf], z: mpc) -> mpf:
    r = abs(z)
    value = mpc(0)
    scale = mpf(0)
    for c in reversed(coeffs):
        value = value * z + c
        scale = scale * r + abs(c)
    if scale == 0:
        return mpf(0)
    return abs(value) / scale

