"""Map families and their derivatives.

Three rational families on the Riemann sphere:

* ``perturbed``    B(z) = z^3 (z - a) / (1 - conj(a) z) + lam / z^2
* ``unperturbed``  B(z) = z^3 (z - a) / (1 - conj(a) z)
* ``mcmullen``     Q(z) = z^n + lam / z^d

The point at infinity is encoded by the marker :data:`INF` (infinite real
part, zero imaginary part).  Inputs at or numerically indistinguishable from
a pole evaluate to :data:`INF` rather than overflowing, which keeps orbit
iteration total.
"""

import math
from dataclasses import dataclass

from . import kernels
from .errors import InvalidParamsError

PERTURBED = "perturbed"
UNPERTURBED = "unperturbed"
MCMULLEN = "mcmullen"

INF = complex(math.inf, 0.0)


def is_infinity(z):
    """True for the infinity marker (any non-finite, non-NaN component)."""
    return math.isinf(z.real) or math.isinf(z.imag)


def is_nan(z):
    return math.isnan(z.real) or math.isnan(z.imag)


@dataclass(frozen=True)
class MapParams:
    """Parameter pair (a, lam) plus family selector."""

    family: str = PERTURBED
    a: complex = 0.5
    lam: complex = 0.0
    n: int = 3
    d: int = 2

    def __post_init__(self):
        if self.family not in (PERTURBED, UNPERTURBED, MCMULLEN):
            raise InvalidParamsError(f"unknown family {self.family!r}")
        if self.family in (PERTURBED, UNPERTURBED):
            mod = abs(self.a)
            if not 0.0 < mod < 1.0:
                raise InvalidParamsError(f"Blaschke parameter needs 0 < |a| < 1, got |a|={mod}")
        if self.family == PERTURBED and self.lam == 0:
            raise InvalidParamsError("perturbed family needs lam != 0")
        if self.family == MCMULLEN:
            if self.lam == 0:
                raise InvalidParamsError("McMullen family needs lam != 0")
            if self.n < 2 or self.d < 1:
                raise InvalidParamsError("McMullen family needs n >= 2, d >= 1")

    @classmethod
    def perturbed(cls, a, lam):
        return cls(PERTURBED, complex(a), complex(lam))

    @classmethod
    def unperturbed(cls, a):
        return cls(UNPERTURBED, complex(a), 0.0)

    @classmethod
    def mcmullen(cls, lam, n=3, d=2):
        return cls(MCMULLEN, 0.5, complex(lam), n, d)

    def poles(self):
        """Finite poles of the selected family."""
        if self.family == PERTURBED:
            return (0.0 + 0.0j, 1.0 / self.a.conjugate())
        if self.family == UNPERTURBED:
            return (1.0 / self.a.conjugate(),)
        return (0.0 + 0.0j,)

    def conjugate(self):
        return MapParams(self.family, self.a.conjugate(), self.lam.conjugate(), self.n, self.d)


def eval_map(z, p):
    """Apply the selected map once.  z may be the infinity marker."""
    z = complex(z)
    if is_infinity(z):
        return INF
    if p.family == MCMULLEN:
        re, im = kernels.step_mcmullen(z.real, z.imag, p.lam.real, p.lam.imag, p.n, p.d)
    else:
        lam = p.lam if p.family == PERTURBED else 0.0 + 0.0j
        re, im = kernels.step_pb(z.real, z.imag, p.a.real, p.a.imag, lam.real, lam.imag)
    if math.isinf(re):
        return INF
    return complex(re, im)


def eval_derivative(z, p):
    """Closed-form derivative of the selected map at z."""
    z = complex(z)
    if is_infinity(z):
        return INF
    if p.family == MCMULLEN:
        re, im = kernels.dstep_mcmullen(z.real, z.imag, p.lam.real, p.lam.imag, p.n, p.d)
    else:
        lam = p.lam if p.family == PERTURBED else 0.0 + 0.0j
        re, im = kernels.dstep_pb(z.real, z.imag, p.a.real, p.a.imag, lam.real, lam.imag)
    if math.isinf(re):
        return INF
    return complex(re, im)


def eval_second_derivative(z, p):
    """Second derivative; needed by Newton iteration on critical points."""
    if p.family == MCMULLEN:
        raise InvalidParamsError("second derivative only provided for Blaschke families")
    z = complex(z)
    if is_infinity(z):
        return INF
    lam = p.lam if p.family == PERTURBED else 0.0 + 0.0j
    re, im = kernels.d2step_pb(z.real, z.imag, p.a.real, p.a.imag, lam.real, lam.imag)
    if math.isinf(re):
        return INF
    return complex(re, im)


def unperturbed_criticals(a):
    """The two free critical points of the unperturbed Blaschke product.

    c_pm = a (2 + |a|^2 pm sqrt((|a|^2 - 4)(|a|^2 - 1))) / (3 |a|^2);
    the root is real and positive for 0 < |a| < 1.
    """
    a = complex(a)
    m2 = abs(a) ** 2
    root = math.sqrt((m2 - 4.0) * (m2 - 1.0))
    c_minus = a * (2.0 + m2 - root) / (3.0 * m2)
    c_plus = a * (2.0 + m2 + root) / (3.0 * m2)
    return c_minus, c_plus
