"""Complex special functions for the functional-equation factor.

Everything here is a pure function of its argument, evaluated through the
selected kernel backend.  The factor itself,

    delta(s) = 2^s pi^(s-1) Gamma(1-s) sin(pi s / 2),

is computed in log space and exponentiated at the end, so intermediate
Gamma/sin overflow never occurs even at heights ~1e5.  It has simple
poles at the positive odd integers and vanishes exactly at the
non-positive even integers; the positive even integers (where a Gamma
pole cancels a sin zero) are handled through the reciprocal identity
delta(s) * delta(1-s) = 1.
"""

from __future__ import annotations

import cmath
import math

from .backend import kernels
from .errors import DomainError, PoleError

_TWO_PI = 2.0 * math.pi


def _as_complex(s) -> complex:
    return complex(s)


def _exact_integer(s: complex):
    """The integer s equals exactly, or None."""
    if s.imag == 0.0 and s.real == math.floor(s.real):
        return int(s.real)
    return None


def log_gamma(s) -> complex:
    """Principal branch of log Gamma(s), continuous on the cut plane."""
    s = _as_complex(s)
    n = _exact_integer(s)
    if n is not None and n <= 0:
        raise PoleError(f"log_gamma pole at non-positive integer s={n}")
    return kernels.log_gamma(s)


def digamma(s) -> complex:
    """Logarithmic derivative of Gamma."""
    s = _as_complex(s)
    n = _exact_integer(s)
    if n is not None and n <= 0:
        raise PoleError(f"digamma pole at non-positive integer s={n}")
    return kernels.digamma(s)


def delta(s) -> complex:
    """The functional-equation factor delta(s)."""
    s = _as_complex(s)
    n = _exact_integer(s)
    if n is not None:
        if n > 0 and n % 2 == 1:
            raise PoleError(f"delta pole at positive odd integer s={n}")
        if n <= 0 and n % 2 == 0:
            return 0.0 + 0.0j
        if n > 0 and n % 2 == 0:
            # reciprocal of the elementary value at 1-n
            return 1.0 / delta(complex(1 - n, 0.0))
    return cmath.exp(kernels.log_delta(s))


def delta_logderiv(s) -> complex:
    """delta'(s)/delta(s) = log(2 pi) - digamma(1-s) + (pi/2) cot(pi s/2)."""
    s = _as_complex(s)
    n = _exact_integer(s)
    if n is not None and (n >= 1 or n % 2 == 0):
        raise PoleError(f"delta_logderiv singular at integer s={n}")
    return kernels.delta_logderiv(s)


def delta_asymptotic(s) -> complex:
    """Leading Stirling approximation (t/2pi)^(1/2-s) * exp(i(t+pi/4)),
    without the 1+O(1/t) correction.  Valid for Im s >= 1, Re s >= -2."""
    s = _as_complex(s)
    t = s.imag
    if t < 1.0 or s.real < -2.0:
        raise DomainError("delta_asymptotic requires Im s >= 1 and Re s >= -2")
    exponent = (0.5 - s) * math.log(t / _TWO_PI) + 1j * (t + 0.25 * math.pi)
    return cmath.exp(exponent)


def theta_rs(t: float) -> float:
    """Phase theta(t) with delta(1/2+it) = exp(-2i theta(t)); continuous,
    vanishing near t = 17.8456."""
    t = float(t)
    if t <= 0.0:
        raise DomainError("theta_rs requires t > 0")
    return kernels.theta(t)
