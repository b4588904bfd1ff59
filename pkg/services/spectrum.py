"""
services/spectrum.py
~~~~~~~~~~~~~~~~~~~~
Eigenvalues of the dissipative Maxwell generator for the unit ball with
constant impedance γ.

Each spherical mode n ≥ 1 contributes two scalar boundary equations:
the alpha family with coupling κ = γ and the beta family with κ = 1/γ.
With w = i/(2μ) both reduce to the real polynomial

    q_n(w) = (1 - κ)/2 · R_n(w) + w² R_n'(w)        (degree n + 1)

and every root with Re w > 0 gives an eigenvalue λ = -1/(2w) with
multiplicity (at least) 2n + 1.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from mpmath import mp, mpc, mpf

from config import GAMMA_ONE_TOL, REAL_TOL, WORKERS, logger
from poly.exactpoly import default_precision, derivative, rn_coefficients
from poly.rootfind import CertifiedRoot, RootOptions, find_all_roots
from special.hankel import boundary_residual
from utils.errors import ConvergenceFailure, GammaIsOne, InvalidGamma, InvalidMode, InvalidParameter
from utils.numbers import ComplexHP, ComplexLike, RealCoefficient, as_complex

HANKEL_TOL = 1e-8


class ModeFamily(str, Enum):
    ALPHA = "alpha"
    BETA  = "beta"

    def kappa(self, gamma: RealCoefficient) -> Fraction:
        g = Fraction(gamma)
        return g if self is ModeFamily.ALPHA else 1 / g

    @property
    def order(self) -> int:
        return 0 if self is ModeFamily.ALPHA else 1

    def swapped(self) -> "ModeFamily":
        return ModeFamily.BETA if self is ModeFamily.ALPHA else ModeFamily.ALPHA


@dataclass(frozen=True)
class BoundaryPolynomial:
    n: int
    kappa: Fraction
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_zero(self) -> Fraction:
        return self.coeffs[0]

    def exact_value(self, w: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc


@dataclass(frozen=True)
class Eigenvalue:
    lambda_: ComplexHP
    n: int
    family: ModeFamily
    multiplicity: int
    w0: ComplexHP
    mu: ComplexHP
    residual_poly: float
    residual_hankel: float

    @property
    def value(self) -> complex:
        return complex(self.lambda_)

    @property
    def is_real(self) -> bool:
        return self.lambda_.im == 0

    def sort_key(self) -> tuple:
        return (-float(self.lambda_.re), self.n, self.family.order, float(self.lambda_.im))


@dataclass(frozen=True)
class SpectrumOptions:
    precision: int | None = None      # None: default_precision(n) per mode
    tol: float | None = None
    real_tol: float = REAL_TOL
    gamma_one_tol: float = GAMMA_ONE_TOL
    hankel_tol: float = HANKEL_TOL
    workers: int = WORKERS

    def roots_for(self, n: int) -> RootOptions:
        return RootOptions(
            precision=self.precision or default_precision(n),
            tol=self.tol,
            real_tol=self.real_tol,
        )


# ---------------------------------------------------------------------------
# Boundary polynomials
# ---------------------------------------------------------------------------

def boundary_polynomial(n: int, kappa: RealCoefficient) -> BoundaryPolynomial:
    """Exact q_n for one coupling value; coefficient m is (1-κ)/2 a_m + (m-1) a_{m-1}."""
    if n < 1:
        raise InvalidMode(f"the spherical expansion starts at n = 1, got n = {n}")
    k = Fraction(kappa)
    if k <= 0:
        raise InvalidParameter(f"kappa must be positive, got {kappa}")
    a = rn_coefficients(n).coeffs
    half = (1 - k) / 2
    coeffs = [half]
    for m in range(1, n + 2):
        am = a[m] if m <= n else 0
        coeffs.append(half * am + (m - 1) * a[m - 1])
    return BoundaryPolynomial(n=n, kappa=k, coeffs=tuple(coeffs))


@lru_cache(maxsize=None)
def rn_roots(n: int, precision: int | None = None) -> tuple[CertifiedRoot, ...]:
    """Certified roots z_j of R_n (empty for n = 0)."""
    if n == 0:
        return ()
    return tuple(find_all_roots(rn_coefficients(n), RootOptions(precision=precision or default_precision(n))))


@lru_cache(maxsize=None)
def rn_derivative_roots(n: int, precision: int | None = None) -> tuple[CertifiedRoot, ...]:
    """Certified roots of R_n' (empty for n ≤ 1)."""
    if n <= 1:
        return ()
    opts = RootOptions(precision=precision or default_precision(n))
    return tuple(find_all_roots(derivative(rn_coefficients(n)), opts))


# ---------------------------------------------------------------------------
# Eigenvalues
# ---------------------------------------------------------------------------

def _family_eigenvalues(n: int, family: ModeFamily, gamma: RealCoefficient, opts: RootOptions,
                        real_tol: float, hankel_tol: float) -> list[Eigenvalue]:
    q = boundary_polynomial(n, family.kappa(gamma))
    roots = find_all_roots(q.coeffs, opts)
    found = []
    for index, root in enumerate(roots):
        if not root.w.re > real_tol:
            continue
        prec = root.refined_precision
        with mp.workprec(prec):
            w0 = root.w.value
            lam = -1 / (2 * w0)
            mu = mpc(0, 1) / (2 * w0)
            mu_hp = ComplexHP(+mu.real, +mu.imag, prec)
            residual_hankel = boundary_residual(n, q.kappa, mu_hp)
        if not residual_hankel < hankel_tol:
            raise ConvergenceFailure(index, residual_hankel)
        found.append(Eigenvalue(
            lambda_=ComplexHP(+lam.real, +lam.imag, prec),
            n=n,
            family=family,
            multiplicity=2 * n + 1,
            w0=root.w,
            mu=mu_hp,
            residual_poly=root.residual_rel,
            residual_hankel=residual_hankel,
        ))
    return found


def family_eigenvalues(n: int, family: ModeFamily, gamma: RealCoefficient,
                       opts: SpectrumOptions | None = None) -> list[Eigenvalue]:
    """Eigenvalues from one (n, family) pair, with one precision doubling on failure."""
    opts = opts or SpectrumOptions()
    root_opts = opts.roots_for(n)
    try:
        return _family_eigenvalues(n, family, gamma, root_opts, opts.real_tol, opts.hankel_tol)
    except ConvergenceFailure as exc:
        logger.warning("(n=%d, %s) failed at %d bits (%s); retrying at %d bits",
                       n, family.value, root_opts.precision, exc, 2 * root_opts.precision)
    try:
        return _family_eigenvalues(n, family, gamma, root_opts.doubled(), opts.real_tol, opts.hankel_tol)
    except ConvergenceFailure as exc:
        raise exc.located(n, family.value) from exc


def _task(args: tuple) -> list[Eigenvalue]:
    return family_eigenvalues(*args)


def is_gamma_one(gamma: float, tol: float = GAMMA_ONE_TOL) -> bool:
    return abs(gamma - 1) <= tol


def _validate_gamma(gamma: RealCoefficient) -> None:
    if not gamma > 0:
        raise InvalidGamma(f"gamma must be positive, got {gamma}")


def eigenvalues_ball(gamma: RealCoefficient, n_max: int, opts: SpectrumOptions | None = None) -> list[Eigenvalue]:
    """All certified eigenvalues from modes 1..n_max, both families.

    Sorted by Re λ descending, then (n, family, Im λ); the order does not
    depend on how the work was scheduled.
    """
    opts = opts or SpectrumOptions()
    _validate_gamma(gamma)
    if n_max < 1:
        raise InvalidMode(f"n_max must be at least 1, got {n_max}")
    if is_gamma_one(float(gamma), opts.gamma_one_tol):
        logger.info("gamma = 1: no eigenvalues in Re λ < 0")
        return []

    tasks = [(n, family, gamma, opts) for n in range(1, n_max + 1) for family in ModeFamily]
    if opts.workers > 1:
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            batches = list(pool.map(_task, tasks))
    else:
        batches = [_task(t) for t in tasks]

    eigs = sorted((e for batch in batches for e in batch), key=Eigenvalue.sort_key)
    logger.info("gamma=%s n_max=%d: %d eigenvalues (%d non-real)", gamma, n_max,
                len(eigs), sum(not e.is_real for e in eigs))
    return eigs


# ---------------------------------------------------------------------------
# Closed forms and bounds
# ---------------------------------------------------------------------------

def _gamma0(gamma: RealCoefficient) -> mpf:
    _validate_gamma(gamma)
    if is_gamma_one(float(gamma)):
        raise GammaIsOne("the closed forms are undefined at gamma = 1")
    g = mpf(Fraction(gamma).numerator) / Fraction(gamma).denominator
    return max(g, 1 / g)


def lambda1_closed_form(gamma: RealCoefficient) -> float:
    """λ₁ = -2 / ((γ₀-1)(1 + sqrt(1 + 4/(γ₀-1)))), γ₀ = max(γ, 1/γ)."""
    with mp.workprec(128):
        s = _gamma0(gamma) - 1
        return float(-2 / (s * (1 + mp.sqrt(1 + 4 / s))))


def lambda1_near_one(eps: float) -> float:
    """λ₁ for γ = 1/(1+ε), in the form ½(1 - sqrt(1 + 4/ε))."""
    if not eps > 0:
        raise InvalidParameter(f"eps must be positive, got {eps}")
    with mp.workprec(128):
        return float((1 - mp.sqrt(1 + 4 / mpf(eps))) / 2)


def n1_root_closed_form(kappa: RealCoefficient) -> float:
    """Positive root of q_1 for κ > 1: ¼(κ-1 + sqrt((κ-1)² + 4(κ-1)))."""
    if not kappa > 1:
        raise InvalidGamma(f"the n = 1 positive root exists only for kappa > 1, got {kappa}")
    with mp.workprec(128):
        s = mpf(Fraction(kappa).numerator) / Fraction(kappa).denominator - 1
        return float((s + mp.sqrt(s * s + 4 * s)) / 4)


def real_eigenvalue_bound(gamma: RealCoefficient) -> float:
    """-1 / max(γ₀-1, sqrt(γ₀-1)): every real eigenvalue except λ₁ lies below it."""
    with mp.workprec(128):
        s = _gamma0(gamma) - 1
        return float(-1 / max(s, mp.sqrt(s)))


def case_bound(gamma: RealCoefficient, w0: float) -> tuple[str, float]:
    """The bound that applies to a real root w0 of an n ≥ 2 equation.

    w0 ≥ 1/(2√3) gives λ ≤ -1/(γ₀-1); smaller roots give λ ≤ -1/sqrt(γ₀-1).
    """
    with mp.workprec(128):
        s = _gamma0(gamma) - 1
        if w0 >= 1 / (2 * math.sqrt(3)):
            return "large-root", float(-1 / s)
        return "small-root", float(-1 / mp.sqrt(s))


# ---------------------------------------------------------------------------
# Complex-root exclusion
# ---------------------------------------------------------------------------

def _probe(w0: ComplexLike) -> complex:
    w = as_complex(w0)
    if not w.real > 0:
        raise InvalidParameter("the certificate needs Re w0 > 0")
    if w.imag == 0:
        raise InvalidParameter("the certificate is stated for non-real w0")
    return w


def complex_root_certificate(n: int, gamma: RealCoefficient, w0: ComplexLike) -> float:
    """Bracket B whose positivity rules out g_n(w0) = 0 for non-real w0, κ = γ > 1.

    B = (γ-1)/(2|w0|²) - Σ Re z_j/|w0-z_j|²
        + Σ_{Im z_j > 0} 4 Re w0 (Im z_j)² / (|w0-z_j|² |w0-conj z_j|²)
    """
    if not gamma > 1:
        raise InvalidGamma(f"the certificate is stated for gamma > 1, got {gamma}")
    if n < 1:
        raise InvalidMode(f"mode index must be ≥ 1, got {n}")
    w = _probe(w0)
    zs = [complex(r) for r in rn_roots(n)]
    bracket = (float(gamma) - 1) / (2 * abs(w) ** 2)
    bracket -= sum(z.real / abs(w - z) ** 2 for z in zs)
    bracket += sum(
        4 * w.real * z.imag ** 2 / (abs(w - z) ** 2 * abs(w - z.conjugate()) ** 2)
        for z in zs if z.imag > 0
    )
    return bracket


def log_derivative_residual(n: int, kappa: RealCoefficient, w0: ComplexLike) -> float:
    """Relative size of (1-κ)/(2w) + w Σ 1/(w - z_j), i.e. g_n/R_n, at w0."""
    w = as_complex(w0)
    zs = [complex(r) for r in rn_roots(n)]
    head = (1 - float(kappa)) / (2 * w)
    tail = w * sum(1 / (w - z) for z in zs)
    scale = abs(head) + abs(w) * sum(1 / abs(w - z) for z in zs)
    return abs(head + tail) / scale if scale else math.inf


# ---------------------------------------------------------------------------
# Coincidences
# ---------------------------------------------------------------------------

def find_coincidences(eigs: list[Eigenvalue], tol: float = 1e-9) -> list[tuple[Eigenvalue, Eigenvalue]]:
    """Pairs from different (n, family) whose eigenvalues agree within tol (relative)."""
    pairs = []
    for a, b in combinations(eigs, 2):
        if (a.n, a.family) == (b.n, b.family):
            continue
        if abs(a.value - b.value) <= tol * max(1.0, abs(a.value)):
            pairs.append((a, b))
    if pairs:
        logger.warning("%d coincident eigenvalue pairs across modes (not merged)", len(pairs))
    return pairs
