"""
services/appendix.py
~~~~~~~~~~~~~~~~~~~~
Verification suite for the ball spectrum.

Checks, in order:
  a  no eigenvalues at γ = 1 (roots of R_n in Re < 0, roots of R_n' in their hull)
  b  λ₁ against its closed form
  c  every other real eigenvalue below the real-eigenvalue bound
  c2 the same bound split by root size (w0 above / below 1/(2√3))
  d  κ > 1 family: only real roots, positive exclusion bracket at random probes
  e  κ > 1 family: a positive real root for every n (exact sign change of q_n)
  f  non-real eigenvalues stay away from the negative axis sector
  g  spectrum(γ) equals spectrum(1/γ) with the families exchanged
  coincidences (information only)
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from config import PROBE_SEED, logger
from poly.hull import convex_hull_2d, distance_to_hull
from services.checks import CheckResult, Report, Status
from services.spectrum import (
    Eigenvalue,
    ModeFamily,
    SpectrumOptions,
    boundary_polynomial,
    case_bound,
    complex_root_certificate,
    eigenvalues_ball,
    find_coincidences,
    is_gamma_one,
    lambda1_closed_form,
    lambda1_near_one,
    log_derivative_residual,
    n1_root_closed_form,
    real_eigenvalue_bound,
    rn_derivative_roots,
    rn_roots,
)

LAMBDA1_RTOL   = 1e-10
BOUND_SLACK    = 1e-12
SYMMETRY_TOL   = 1e-9
HULL_TOL       = 1e-9
PROBES_PER_N   = 100
SECTOR_HALF    = math.pi / 4


def _dominant_family(gamma: float) -> ModeFamily:
    """The family whose coupling exceeds 1."""
    return ModeFamily.ALPHA if gamma > 1 else ModeFamily.BETA


def _arg_distance_from_pi(z: complex) -> float:
    return math.pi - abs(math.atan2(z.imag, z.real))


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def check_gamma_one(n_max: int) -> CheckResult:
    """γ = 1: q_n = w²R_n′, so its roots besides 0 sit in the hull of the R_n roots.

    Every R_n root has Re < 0 and every R_n′ root lies in their hull, hence
    no q_n has a positive root and the spectrum is empty.
    """
    worst_re = -math.inf
    worst_hull = 0.0
    for n in range(1, n_max + 1):
        zs = [complex(r) for r in rn_roots(n)]
        worst_re = max(worst_re, max(z.real for z in zs))
        hull = convex_hull_2d(zs)
        for root in rn_derivative_roots(n):
            worst_hull = max(worst_hull, distance_to_hull(complex(root), hull))
    ok = worst_re < 0 and worst_hull <= HULL_TOL
    return CheckResult.judge(
        "gamma_one_empty", ok, margin=-worst_re,
        detail=f"max Re z_j = {worst_re:.3e}, max hull distance of R_n' roots = {worst_hull:.3e}",
    )


def check_lambda1(gamma: float, eigs: list[Eigenvalue]) -> CheckResult:
    family = _dominant_family(gamma)
    first = [e for e in eigs if e.n == 1 and e.family is family]
    if len(first) != 1:
        return CheckResult.judge("lambda1_closed_form", False, detail=f"{len(first)} eigenvalues from n = 1")
    expected = lambda1_closed_form(gamma)
    got = first[0].value.real
    rel = abs(got - expected) / abs(expected)
    kappa = float(family.kappa(gamma))
    root_err = abs(float(first[0].w0.re) - n1_root_closed_form(kappa))
    near_one = lambda1_near_one(kappa - 1)
    ok = rel <= LAMBDA1_RTOL and abs(near_one - expected) <= LAMBDA1_RTOL * abs(expected)
    return CheckResult.judge(
        "lambda1_closed_form", ok, margin=LAMBDA1_RTOL - rel,
        detail=f"lambda1 = {got:.17g}, closed form {expected:.17g}, |w0 - w0_closed| = {root_err:.3e}",
    )


def _other_real(gamma: float, eigs: list[Eigenvalue]) -> list[Eigenvalue]:
    family = _dominant_family(gamma)
    return [e for e in eigs if e.is_real and not (e.n == 1 and e.family is family)]


def check_real_bound(gamma: float, eigs: list[Eigenvalue]) -> CheckResult:
    bound = real_eigenvalue_bound(gamma)
    others = _other_real(gamma, eigs)
    if not others:
        return CheckResult.judge("real_eigenvalue_bound", True, detail="no real eigenvalues besides lambda1")
    worst = max(e.value.real for e in others)
    return CheckResult.judge(
        "real_eigenvalue_bound", worst <= bound + BOUND_SLACK, margin=bound - worst,
        detail=f"bound {bound:.17g}, largest other real eigenvalue {worst:.17g}",
    )


def check_case_bounds(gamma: float, eigs: list[Eigenvalue]) -> CheckResult:
    margin = math.inf
    cases = {"large-root": 0, "small-root": 0}
    for e in _other_real(gamma, eigs):
        case, bound = case_bound(gamma, float(e.w0.re))
        cases[case] += 1
        lam = e.value.real
        if lam > bound + BOUND_SLACK:
            return CheckResult.judge("real_bound_cases", False, margin=bound - lam,
                                     detail=f"n={e.n} ({case}) lambda {lam:.17g} vs bound {bound:.17g}")
        margin = min(margin, bound - lam)
    return CheckResult.judge(
        "real_bound_cases", True, margin=None if math.isinf(margin) else margin,
        detail=f"{cases['large-root']} large-root, {cases['small-root']} small-root eigenvalues",
    )


def check_complex_exclusion(gamma: float, n_max: int, eigs: list[Eigenvalue],
                            seed: int = PROBE_SEED, probes: int = PROBES_PER_N) -> CheckResult:
    family = _dominant_family(gamma)
    kappa = float(family.kappa(gamma))
    nonreal = [e for e in eigs if e.family is family and not e.is_real]
    if nonreal:
        return CheckResult.judge("complex_root_exclusion", False,
                                 detail=f"{len(nonreal)} non-real roots accepted in the kappa>1 family")

    rng = np.random.default_rng(seed)
    worst = math.inf
    for n in range(1, n_max + 1):
        re = rng.uniform(1e-3, 2.0, probes)
        im = rng.uniform(1e-3, 2.0, probes) * rng.choice([-1.0, 1.0], probes)
        for w in re + 1j * im:
            worst = min(worst, complex_root_certificate(n, kappa, complex(w)))
    log_residual = max((log_derivative_residual(e.n, kappa, e.w0) for e in eigs if e.family is family),
                       default=0.0)
    return CheckResult.judge(
        "complex_root_exclusion", worst > 0, margin=worst,
        detail=f"min bracket over {probes * n_max} probes; max log-derivative residual {log_residual:.3e}",
    )


def check_existence(gamma: float, n_max: int, eigs: list[Eigenvalue]) -> CheckResult:
    """Exact sign change q_n(0) < 0 < q_n(W) for every n, plus an accepted eigenvalue."""
    family = _dominant_family(gamma)
    kappa = family.kappa(gamma)
    counts = {n: 0 for n in range(1, n_max + 1)}
    for e in eigs:
        if e.family is family and e.is_real:
            counts[e.n] += 1
    for n in range(1, n_max + 1):
        q = boundary_polynomial(n, kappa)
        lead = abs(q.coeffs[-1])
        cauchy = 1 + max(abs(c) for c in q.coeffs[:-1]) / lead
        if not (q.at_zero() < 0 < q.exact_value(Fraction(cauchy))):
            return CheckResult.judge("real_root_each_mode", False, detail=f"no sign change for n={n}")
        if counts[n] == 0:
            return CheckResult.judge("real_root_each_mode", False, detail=f"no eigenvalue accepted for n={n}")
    return CheckResult.judge("real_root_each_mode", True, margin=float(min(counts.values())),
                             detail=f"{sum(counts.values())} real eigenvalues over {n_max} modes")


def check_complex_sector(eigs: list[Eigenvalue]) -> CheckResult:
    nonreal = [e for e in eigs if not e.is_real]
    if not nonreal:
        return CheckResult.judge("complex_eigenvalue_sector", True, detail="0 non-real eigenvalues found")
    worst = min(_arg_distance_from_pi(e.value) for e in nonreal)
    return CheckResult.judge(
        "complex_eigenvalue_sector", worst > SECTOR_HALF, margin=worst - SECTOR_HALF,
        detail=f"{len(nonreal)} non-real eigenvalues; min |arg - pi| = {worst:.6g}",
    )


def check_family_swap(gamma: float, n_max: int, eigs: list[Eigenvalue], opts: SpectrumOptions,
                      mirror: list[Eigenvalue] | None = None) -> CheckResult:
    """Spectrum at 1/γ is the spectrum at γ with the families exchanged."""
    if mirror is None:
        mirror = eigenvalues_ball(float(1 / Fraction(gamma)), n_max, opts)
    if len(mirror) != len(eigs):
        return CheckResult.judge("family_swap_symmetry", False,
                                 detail=f"{len(eigs)} vs {len(mirror)} eigenvalues")
    worst = 0.0
    remaining = list(mirror)
    for e in eigs:
        candidates = [m for m in remaining if m.n == e.n and m.family is e.family.swapped()]
        if not candidates:
            return CheckResult.judge("family_swap_symmetry", False, detail=f"no partner for n={e.n}")
        best = min(candidates, key=lambda m: abs(m.value - e.value))
        remaining.remove(best)
        worst = max(worst, abs(best.value - e.value))
    return CheckResult.judge("family_swap_symmetry", worst <= SYMMETRY_TOL, margin=SYMMETRY_TOL - worst,
                             detail=f"max distance {worst:.3e}")


def report_coincidences(eigs: list[Eigenvalue]) -> CheckResult:
    pairs = find_coincidences(eigs)
    detail = "; ".join(f"(n={a.n},{a.family.value})~(n={b.n},{b.family.value})" for a, b in pairs)
    return CheckResult("coincidences", Status.INFO, float(len(pairs)), detail or "none")


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

def verify_appendix(gamma: float, n_max: int, opts: SpectrumOptions | None = None,
                    seed: int = PROBE_SEED, eigs: list[Eigenvalue] | None = None,
                    mirror: list[Eigenvalue] | None = None) -> Report:
    """Run every appendix check.

    `eigs` may carry an already computed spectrum at γ and `mirror` one at 1/γ.
    """
    opts = opts or SpectrumOptions()
    report = Report("appendix", {"gamma": gamma, "n_max": n_max})
    report.add(check_gamma_one(n_max))

    later = ("lambda1_closed_form", "real_eigenvalue_bound", "real_bound_cases", "complex_root_exclusion",
             "real_root_each_mode", "complex_eigenvalue_sector", "family_swap_symmetry")
    if is_gamma_one(gamma, opts.gamma_one_tol):
        for name in later:
            report.add(CheckResult.skipped(name, "gamma = 1"))
        return report

    if eigs is None:
        eigs = eigenvalues_ball(gamma, n_max, opts)
    report.params["eigenvalues"] = len(eigs)
    report.params["non_real"] = sum(not e.is_real for e in eigs)
    report.add(check_lambda1(gamma, eigs))
    report.add(check_real_bound(gamma, eigs))
    report.add(check_case_bounds(gamma, eigs))
    report.add(check_complex_exclusion(gamma, n_max, eigs, seed=seed))
    report.add(check_existence(gamma, n_max, eigs))
    report.add(check_complex_sector(eigs))
    report.add(check_family_swap(gamma, n_max, eigs, opts, mirror))
    report.add(report_coincidences(eigs))

    logger.info("appendix suite gamma=%s n_max=%d: %s", gamma, n_max, "PASS" if report.passed else "FAIL")
    return report
