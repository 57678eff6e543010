"""Polynomial roots, preimages, and Newton refinement.

Roots come from the companion-matrix eigenvalues (``np.roots``) and are then
polished by a few Newton steps on the polynomial; the result is sorted by
(re, im) so a RootSet is reproducible across runs and schedules.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import maps
from .errors import DerivativeVanishedError, InvalidParamsError, NoConvergenceError

MAX_DEGREE = 16
NEWTON_CAP = 50
NEWTON_TOL = 1e-12


@dataclass
class RootSet:
    """Ordered roots of one polynomial plus their residuals."""

    roots: np.ndarray
    residuals: np.ndarray
    converged: np.ndarray
    degree: int = field(default=0)

    def __post_init__(self):
        if self.degree == 0:
            self.degree = len(self.roots)

    @property
    def all_converged(self):
        return bool(np.all(self.converged))


def _sort_roots(roots, residuals, converged):
    order = np.lexsort((roots.imag, roots.real))
    return roots[order], residuals[order], converged[order]


def polynomial_roots(coeffs):
    """All complex roots of a polynomial given highest-degree-first coeffs."""
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or len(c) < 2:
        raise InvalidParamsError("need at least a degree-1 polynomial")
    if c[0] == 0:
        raise InvalidParamsError("leading coefficient must be nonzero")
    if len(c) - 1 > MAX_DEGREE:
        raise InvalidParamsError(f"degree {len(c) - 1} exceeds cap {MAX_DEGREE}")
    roots = np.roots(c)
    dc = np.polyder(c)
    for _ in range(6):
        vals = np.polyval(c, roots)
        ders = np.polyval(dc, roots)
        step = np.where(ders != 0, vals / np.where(ders != 0, ders, 1), 0)
        roots = roots - step
    residuals = np.abs(np.polyval(c, roots))
    scale = np.max(np.abs(c))
    converged = residuals <= 1e-10 * scale
    roots, residuals, converged = _sort_roots(roots, residuals, converged)
    return RootSet(roots, residuals, converged)


def preimage_coeffs(w, p):
    """Coefficients (degree 6, highest first) of the polynomial whose roots
    are the preimages of w: z^6 - a z^5 + conj(a) w z^3 - w z^2
    - lam conj(a) z + lam."""
    a = p.a
    lam = p.lam
    ac = a.conjugate()
    return np.array([1.0, -a, 0.0, ac * w, -w, -lam * ac, lam], dtype=complex)


def preimages_of_point(w, p):
    """The six preimages of w under the perturbed product, with residuals.

    w may be the infinity marker; its preimages are the poles with
    multiplicity: 0 (double), 1/conj(a), and infinity (triple).
    """
    if p.family != maps.PERTURBED:
        raise InvalidParamsError("preimages_of_point requires the perturbed family")
    w = complex(w)
    if maps.is_infinity(w):
        roots = np.array([0.0, 0.0, 1.0 / p.a.conjugate(), maps.INF, maps.INF, maps.INF],
                         dtype=complex)
        zero = np.zeros(6)
        return RootSet(roots, zero, np.ones(6, dtype=bool), degree=6)
    return polynomial_roots(preimage_coeffs(w, p))


TARGET_CRITICAL = "critical-point"
TARGET_FIXED = "map-fixed-point"
TARGET_PREIMAGE = "preimage-of"


@dataclass
class NewtonResult:
    root: complex
    iterations: int
    residual: float


def newton_refine(seed, target, p, w=None):
    """Newton iteration toward a simple root of the target equation.

    target is one of ``critical-point`` (B'(z) = 0), ``map-fixed-point``
    (B(z) = z) or ``preimage-of`` (B(z) = w).  Converges to residual
    max(1e-12, 1e-12 * scale) within 50 iterations or raises.
    """
    z = complex(seed)
    if target == TARGET_CRITICAL:
        if p.family == maps.MCMULLEN:
            raise InvalidParamsError("critical-point refinement covers the Blaschke families")
        f = lambda u: maps.eval_derivative(u, p)
        fp = lambda u: maps.eval_second_derivative(u, p)
        tol = NEWTON_TOL
    elif target == TARGET_FIXED:
        f = lambda u: maps.eval_map(u, p) - u
        fp = lambda u: maps.eval_derivative(u, p) - 1.0
        tol = max(NEWTON_TOL, NEWTON_TOL * abs(seed))
    elif target == TARGET_PREIMAGE:
        if w is None:
            raise InvalidParamsError("preimage-of target needs w")
        w = complex(w)
        f = lambda u: maps.eval_map(u, p) - w
        fp = lambda u: maps.eval_derivative(u, p)
        tol = max(NEWTON_TOL, NEWTON_TOL * abs(w))
    else:
        raise InvalidParamsError(f"unknown newton target {target!r}")

    for it in range(NEWTON_CAP + 1):
        fv = f(z)
        if maps.is_infinity(fv) or maps.is_nan(fv):
            raise NoConvergenceError(f"newton left the finite plane at iteration {it}",
                                     iterations=it)
        res = abs(fv)
        if res <= tol:
            return NewtonResult(z, it, res)
        if it == NEWTON_CAP:
            break
        d = fp(z)
        if d == 0 or maps.is_infinity(d) or maps.is_nan(d):
            raise DerivativeVanishedError(f"newton step undefined at {z}")
        z = z - fv / d
    raise NoConvergenceError(f"no convergence after {NEWTON_CAP} iterations (residual {res:.3e})",
                             iterations=NEWTON_CAP, residual=res)


def fifth_roots_of_unity():
    return np.array([cmath.exp(2j * math.pi * k / 5) for k in range(5)])


def ring_zero_seeds(p):
    """Asymptotic positions xi (lam/a)^(1/5) of the five zeros near 0."""
    base = (p.lam / p.a) ** 0.2
    return fifth_roots_of_unity() * base


def ring_critical_seeds(p):
    """Asymptotic positions -xi (2 lam / (3a))^(1/5) of the five critical
    points near 0."""
    base = (2.0 * p.lam / (3.0 * p.a)) ** 0.2
    return -fifth_roots_of_unity() * base
