"""Pure-Python kernel backend.

Scalar kernels are written with math/cmath; the batch kernels vectorize
with numpy.  The compiled backend (_kernels_cy) implements the identical
interface and is preferred at import time when available; see backend.py.

Numerical layout shared by both backends:

* log-gamma: Stirling series once Re z >= 16 or |Im z| >= 16, with
  recurrence shifts (principal logs summed individually, which keeps the
  principal branch exact on the cut plane) to reach that region.
* the functional-equation factor is evaluated in log space throughout;
  sin and cot switch to their dominant-exponential forms once
  |Im(pi*s/2)| > 20 so no intermediate overflows for heights up to 1e5.
* the zeta Dirichlet sum is compensated (numpy pairwise here, Kahan in
  the compiled kernel).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._bernoulli import EM_COEF, PSI_COEF, STIRLING_COEF

name = "python"

_LOG_2 = math.log(2.0)
_LOG_PI = math.log(math.pi)
_LOG_2PI = math.log(2.0 * math.pi)
_HALF_LOG_2PI = 0.5 * _LOG_2PI

_STIRLING_EDGE = 16.0
_EXPFORM_EDGE = 20.0  # |Im w| beyond which sin/cot use exponential forms


# ---------------------------------------------------------------------------
# log-gamma / digamma

def _stirling_log_gamma(z):
    rz = 1.0 / z
    rz2 = rz * rz
    poly = STIRLING_COEF[-1]
    for c in STIRLING_COEF[-2::-1]:
        poly = c + rz2 * poly
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + rz * poly


def log_gamma(z):
    """Principal branch of log Gamma, continuous off (-inf, 0]."""
    z = complex(z)
    if z.real >= _STIRLING_EDGE:
        return _stirling_log_gamma(z)
    if abs(z.imag) >= _STIRLING_EDGE:
        if z.real >= 0.0:
            return _stirling_log_gamma(z)
        m = int(math.ceil(-z.real))  # keep |arg| well inside (-3pi/4, 3pi/4)
    else:
        m = int(math.ceil(_STIRLING_EDGE - z.real))
    shift = 0.0 + 0.0j
    for j in range(m):
        shift += cmath.log(z + j)
    return _stirling_log_gamma(z + m) - shift


def _stirling_digamma(z):
    rz = 1.0 / z
    rz2 = rz * rz
    poly = PSI_COEF[-1]
    for c in PSI_COEF[-2::-1]:
        poly = c + rz2 * poly
    return cmath.log(z) - 0.5 * rz - rz2 * poly


def digamma(z):
    z = complex(z)
    if z.real >= _STIRLING_EDGE:
        return _stirling_digamma(z)
    if abs(z.imag) >= _STIRLING_EDGE:
        if z.real >= 0.0:
            return _stirling_digamma(z)
        m = int(math.ceil(-z.real))
    else:
        m = int(math.ceil(_STIRLING_EDGE - z.real))
    shift = 0.0 + 0.0j
    for j in range(m):
        shift += 1.0 / (z + j)
    return _stirling_digamma(z + m) - shift


# ---------------------------------------------------------------------------
# functional-equation factor, log space

def _log_sin(w):
    # branch is irrelevant downstream (only exp of totals is consumed)
    if w.imag > _EXPFORM_EDGE:
        return complex(-_LOG_2, 0.5 * math.pi) - 1j * w + cmath.log(1.0 - cmath.exp(2j * w))
    if w.imag < -_EXPFORM_EDGE:
        return complex(-_LOG_2, -0.5 * math.pi) + 1j * w + cmath.log(1.0 - cmath.exp(-2j * w))
    return cmath.log(cmath.sin(w))


def _cot(w):
    if w.imag > _EXPFORM_EDGE:
        q = cmath.exp(2j * w)
        return 1j * (q + 1.0) / (q - 1.0)
    if w.imag < -_EXPFORM_EDGE:
        q = cmath.exp(-2j * w)
        return 1j * (1.0 + q) / (1.0 - q)
    return 1.0 / cmath.tan(w)


def log_delta(s):
    """log of the functional-equation factor (branch unspecified)."""
    s = complex(s)
    return (
        s * _LOG_2
        + (s - 1.0) * _LOG_PI
        + log_gamma(1.0 - s)
        + _log_sin(0.5 * math.pi * s)
    )


def delta_logderiv(s):
    s = complex(s)
    return _LOG_2PI - digamma(1.0 - s) + 0.5 * math.pi * _cot(0.5 * math.pi * s)


def theta(t):
    """Phase of the factor on the critical line: theta(t), continuous in t."""
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * _LOG_PI


# ---------------------------------------------------------------------------
# zeta via Euler-Maclaurin

def zeta_em(s, n_terms, order, logn=None):
    """Euler-Maclaurin value with truncation point n_terms and `order`
    Bernoulli corrections.  `logn` may carry a precomputed log table with
    logn[i] = log(i + 1)."""
    s = complex(s)
    n = int(n_terms)
    if logn is None:
        ln = np.log(np.arange(1.0, n + 1.0))
    else:
        ln = logn[:n]
    total = complex(np.exp((-s) * ln).sum())

    log_n = math.log(n)
    n_pow = cmath.exp(-s * log_n)  # N^{-s}
    total += n_pow * n / (s - 1.0) - 0.5 * n_pow

    fac = n_pow / n  # N^{-s-1}
    prod = s
    inv_n2 = 1.0 / (n * n)
    corr = EM_COEF[0] * prod * fac
    for k in range(2, int(order) + 1):
        prod = prod * (s + (2 * k - 3)) * (s + (2 * k - 2))
        fac *= inv_n2
        corr += EM_COEF[k - 1] * prod * fac
    return total + corr


def zeta_em_batch(points, n_terms, order, logn):
    """zeta_em over an array of points with a shared log table."""
    out = np.empty(len(points), dtype=np.complex128)
    for i, (s, n) in enumerate(zip(points, n_terms)):
        out[i] = zeta_em(complex(s), int(n), order, logn)
    return out


# ---------------------------------------------------------------------------
# Newton iteration on the defining relation

def newton_delta(a, seed, tol, max_iter, damping):
    """Damped Newton for delta(s) = a; returns (s, residual, iterations).

    Overflow along a diverging trajectory reports a non-finite residual
    instead of raising (matching the compiled kernel's IEEE semantics);
    the caller treats it as non-convergence.
    """
    a = complex(a)
    s = complex(seed)
    res = math.inf
    try:
        for it in range(int(max_iter)):
            d = cmath.exp(log_delta(s))
            f = d - a
            res = abs(f)
            if res <= tol:
                return s, res, it
            s = s - damping * f / (d * delta_logderiv(s))
        res = abs(cmath.exp(log_delta(s)) - a)
    except (OverflowError, ValueError, ZeroDivisionError):
        return s, math.inf, int(max_iter)
    return s, res, int(max_iter)


# ---------------------------------------------------------------------------
# vectorized kernels for contour quadrature

def _log_gamma_vec(z):
    z = np.asarray(z, dtype=np.complex128)
    shift = np.zeros(z.shape, dtype=np.complex128)
    m = np.zeros(z.shape, dtype=np.int64)
    interior = (z.real < _STIRLING_EDGE) & (np.abs(z.imag) < _STIRLING_EDGE)
    m[interior] = np.ceil(_STIRLING_EDGE - z.real[interior])
    tall_left = ~interior & (z.real < 0.0)
    m[tall_left] = np.ceil(-z.real[tall_left])
    for j in range(int(m.max(initial=0))):
        mask = m > j
        shift[mask] += np.log(z[mask] + j)
    zs = z + m
    rz = 1.0 / zs
    rz2 = rz * rz
    poly = np.full(z.shape, STIRLING_COEF[-1], dtype=np.complex128)
    for c in STIRLING_COEF[-2::-1]:
        poly = c + rz2 * poly
    return (zs - 0.5) * np.log(zs) - zs + _HALF_LOG_2PI + rz * poly - shift


def _digamma_vec(z):
    z = np.asarray(z, dtype=np.complex128)
    shift = np.zeros(z.shape, dtype=np.complex128)
    m = np.zeros(z.shape, dtype=np.int64)
    interior = (z.real < _STIRLING_EDGE) & (np.abs(z.imag) < _STIRLING_EDGE)
    m[interior] = np.ceil(_STIRLING_EDGE - z.real[interior])
    tall_left = ~interior & (z.real < 0.0)
    m[tall_left] = np.ceil(-z.real[tall_left])
    for j in range(int(m.max(initial=0))):
        mask = m > j
        shift[mask] += 1.0 / (z[mask] + j)
    zs = z + m
    rz = 1.0 / zs
    rz2 = rz * rz
    poly = np.full(z.shape, PSI_COEF[-1], dtype=np.complex128)
    for c in PSI_COEF[-2::-1]:
        poly = c + rz2 * poly
    return np.log(zs) - 0.5 * rz - rz2 * poly - shift


def _log_sin_vec(w):
    out = np.empty(w.shape, dtype=np.complex128)
    hi = w.imag > _EXPFORM_EDGE
    lo = w.imag < -_EXPFORM_EDGE
    mid = ~(hi | lo)
    if hi.any():
        wh = w[hi]
        out[hi] = complex(-_LOG_2, 0.5 * math.pi) - 1j * wh + np.log(1.0 - np.exp(2j * wh))
    if lo.any():
        wl = w[lo]
        out[lo] = complex(-_LOG_2, -0.5 * math.pi) + 1j * wl + np.log(1.0 - np.exp(-2j * wl))
    if mid.any():
        out[mid] = np.log(np.sin(w[mid]))
    return out


def _cot_vec(w):
    out = np.empty(w.shape, dtype=np.complex128)
    hi = w.imag > _EXPFORM_EDGE
    lo = w.imag < -_EXPFORM_EDGE
    mid = ~(hi | lo)
    if hi.any():
        q = np.exp(2j * w[hi])
        out[hi] = 1j * (q + 1.0) / (q - 1.0)
    if lo.any():
        q = np.exp(-2j * w[lo])
        out[lo] = 1j * (1.0 + q) / (1.0 - q)
    if mid.any():
        out[mid] = 1.0 / np.tan(w[mid])
    return out


def log_delta_batch(points):
    s = np.asarray(points, dtype=np.complex128)
    return (
        s * _LOG_2
        + (s - 1.0) * _LOG_PI
        + _log_gamma_vec(1.0 - s)
        + _log_sin_vec(0.5 * math.pi * s)
    )


def delta_logderiv_batch(points):
    s = np.asarray(points, dtype=np.complex128)
    return _LOG_2PI - _digamma_vec(1.0 - s) + 0.5 * math.pi * _cot_vec(0.5 * math.pi * s)


def winding_integrand_batch(points, a):
    """delta'(s) / (delta(s) - a) on an array of contour nodes."""
    s = np.asarray(points, dtype=np.complex128)
    ratio = a * np.exp(-log_delta_batch(s))  # a / delta(s)
    return delta_logderiv_batch(s) / (1.0 - ratio)
