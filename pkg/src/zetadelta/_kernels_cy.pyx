# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Same interface and numerical layout as _kernels_py (Stirling edges,
exponential-form switches, Euler-Maclaurin corrections); the scalar
kernels run as plain C and the batch loops release the GIL, so thread
pools scale on the enumeration and quadrature sweeps.
"""

from libc.math cimport M_PI, atan2, ceil, cos, exp, fabs, hypot, log, sin, tan

import numpy as np

from . import _bernoulli

name = "cython"

cdef double[16] STIRLING_C
cdef double[16] PSI_C
cdef double[16] EM_C


def _load_tables():
    cdef int i
    for i in range(16):
        STIRLING_C[i] = _bernoulli.STIRLING_COEF[i]
        PSI_C[i] = _bernoulli.PSI_COEF[i]
        EM_C[i] = _bernoulli.EM_COEF[i]


_load_tables()

cdef double LOG_2 = log(2.0)
cdef double LOG_PI = log(M_PI)
cdef double LOG_2PI = log(2.0 * M_PI)
cdef double HALF_LOG_2PI = 0.5 * LOG_2PI
cdef double STIRLING_EDGE = 16.0
cdef double EXPFORM_EDGE = 20.0


cdef inline double complex cexpz(double complex z) nogil:
    cdef double m = exp(z.real)
    return m * cos(z.imag) + 1j * (m * sin(z.imag))


cdef inline double complex clogz(double complex z) nogil:
    return log(hypot(z.real, z.imag)) + 1j * atan2(z.imag, z.real)


# ---------------------------------------------------------------------------
# log-gamma / digamma

cdef double complex _stirling_lg(double complex z) nogil:
    cdef double complex rz = 1.0 / z
    cdef double complex rz2 = rz * rz
    cdef double complex poly = STIRLING_C[15]
    cdef int i
    for i in range(14, -1, -1):
        poly = STIRLING_C[i] + rz2 * poly
    return (z - 0.5) * clogz(z) - z + HALF_LOG_2PI + rz * poly


cdef double complex _log_gamma(double complex z) nogil:
    cdef int m, j
    cdef double complex shift = 0.0
    if z.real >= STIRLING_EDGE:
        return _stirling_lg(z)
    if fabs(z.imag) >= STIRLING_EDGE:
        if z.real >= 0.0:
            return _stirling_lg(z)
        m = <int>ceil(-z.real)
    else:
        m = <int>ceil(STIRLING_EDGE - z.real)
    for j in range(m):
        shift = shift + clogz(z + j)
    return _stirling_lg(z + m) - shift


cdef double complex _stirling_psi(double complex z) nogil:
    cdef double complex rz = 1.0 / z
    cdef double complex rz2 = rz * rz
    cdef double complex poly = PSI_C[15]
    cdef int i
    for i in range(14, -1, -1):
        poly = PSI_C[i] + rz2 * poly
    return clogz(z) - 0.5 * rz - rz2 * poly


cdef double complex _digamma(double complex z) nogil:
    cdef int m, j
    cdef double complex shift = 0.0
    if z.real >= STIRLING_EDGE:
        return _stirling_psi(z)
    if fabs(z.imag) >= STIRLING_EDGE:
        if z.real >= 0.0:
            return _stirling_psi(z)
        m = <int>ceil(-z.real)
    else:
        m = <int>ceil(STIRLING_EDGE - z.real)
    for j in range(m):
        shift = shift + 1.0 / (z + j)
    return _stirling_psi(z + m) - shift


# ---------------------------------------------------------------------------
# functional-equation factor

cdef inline double complex _csin(double complex w) nogil:
    # |Im w| <= 20 keeps the halves finite
    return sin(w.real) * 0.5 * (exp(w.imag) + exp(-w.imag)) \
        + 1j * (cos(w.real) * 0.5 * (exp(w.imag) - exp(-w.imag)))


cdef inline double complex _ccos(double complex w) nogil:
    return cos(w.real) * 0.5 * (exp(w.imag) + exp(-w.imag)) \
        - 1j * (sin(w.real) * 0.5 * (exp(w.imag) - exp(-w.imag)))


cdef double complex _log_sin(double complex w) nogil:
    if w.imag > EXPFORM_EDGE:
        return (-LOG_2 + 0.5 * M_PI * 1j) - 1j * w + clogz(1.0 - cexpz(2j * w))
    if w.imag < -EXPFORM_EDGE:
        return (-LOG_2 - 0.5 * M_PI * 1j) + 1j * w + clogz(1.0 - cexpz(-2j * w))
    return clogz(_csin(w))


cdef double complex _cot(double complex w) nogil:
    cdef double complex q
    if w.imag > EXPFORM_EDGE:
        q = cexpz(2j * w)
        return 1j * (q + 1.0) / (q - 1.0)
    if w.imag < -EXPFORM_EDGE:
        q = cexpz(-2j * w)
        return 1j * (1.0 + q) / (1.0 - q)
    return _ccos(w) / _csin(w)


cdef double complex _log_delta(double complex s) nogil:
    return (
        s * LOG_2
        + (s - 1.0) * LOG_PI
        + _log_gamma(1.0 - s)
        + _log_sin(0.5 * M_PI * s)
    )


cdef double complex _dlog_delta(double complex s) nogil:
    return LOG_2PI - _digamma(1.0 - s) + 0.5 * M_PI * _cot(0.5 * M_PI * s)


cdef double _theta(double t) nogil:
    cdef double complex lg = _log_gamma(0.25 + 0.5 * t * 1j)
    return lg.imag - 0.5 * t * LOG_PI


# ---------------------------------------------------------------------------
# Euler-Maclaurin zeta

cdef double complex _zeta_em(double complex s, long n, int order,
                             const double* logn) nogil:
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0
    cdef double ln, e, ph, tr, ti, y, acc
    cdef long i
    for i in range(1, n + 1):
        if logn != NULL:
            ln = logn[i - 1]
        else:
            ln = log(<double>i)
        e = exp(-s.real * ln)
        ph = s.imag * ln
        tr = e * cos(ph)
        ti = -e * sin(ph)
        y = tr - cr
        acc = sr + y
        cr = (acc - sr) - y
        sr = acc
        y = ti - ci
        acc = si + y
        ci = (acc - si) - y
        si = acc

    cdef double complex total = sr + 1j * si
    cdef double lnN = log(<double>n)
    cdef double complex npow = cexpz(-s * lnN)
    total = total + npow * <double>n / (s - 1.0) - 0.5 * npow

    cdef double complex fac = npow / <double>n
    cdef double complex prod = s
    cdef double inv_n2 = 1.0 / (<double>n * <double>n)
    cdef double complex corr = EM_C[0] * prod * fac
    cdef int k
    for k in range(2, order + 1):
        prod = prod * (s + (2 * k - 3)) * (s + (2 * k - 2))
        fac = fac * inv_n2
        corr = corr + EM_C[k - 1] * prod * fac
    return total + corr


# ---------------------------------------------------------------------------
# python-visible wrappers

def log_gamma(z):
    return complex(_log_gamma(z))


def digamma(z):
    return complex(_digamma(z))


def log_delta(s):
    return complex(_log_delta(s))


def delta_logderiv(s):
    return complex(_dlog_delta(s))


def theta(double t):
    return _theta(t)


def zeta_em(s, n_terms, order, logn=None):
    cdef double complex cs = s
    cdef long n = n_terms
    cdef int o = order
    cdef double[::1] tab
    if logn is None:
        return complex(_zeta_em(cs, n, o, NULL))
    tab = np.ascontiguousarray(logn, dtype=np.float64)
    if tab.shape[0] < n:
        raise ValueError("log table shorter than the truncation point")
    return complex(_zeta_em(cs, n, o, &tab[0]))


def zeta_em_batch(points, n_terms, order, logn):
    pts = np.ascontiguousarray(points, dtype=np.complex128)
    ns = np.ascontiguousarray(n_terms, dtype=np.int64)
    table = np.ascontiguousarray(logn, dtype=np.float64)
    out = np.empty(pts.shape[0], dtype=np.complex128)
    cdef double complex[::1] p = pts
    cdef long[::1] nv = ns
    cdef double[::1] tab = table
    cdef double complex[::1] o = out
    cdef Py_ssize_t i, count = p.shape[0]
    cdef int order_c = order
    with nogil:
        for i in range(count):
            o[i] = _zeta_em(p[i], nv[i], order_c, &tab[0])
    return out


def newton_delta(a, seed, tol, max_iter, damping):
    cdef double complex ca = a
    cdef double complex s = seed
    cdef double complex d, f
    cdef double res = 0.0
    cdef double tl = tol, dmp = damping
    cdef int mi = max_iter
    cdef int it, done = -1
    with nogil:
        for it in range(mi):
            d = cexpz(_log_delta(s))
            f = d - ca
            res = hypot(f.real, f.imag)
            if res <= tl:
                done = it
                break
            s = s - dmp * f / (d * _dlog_delta(s))
        if done < 0:
            d = cexpz(_log_delta(s))
            f = d - ca
            res = hypot(f.real, f.imag)
            done = mi
    return complex(s), res, done


def log_delta_batch(points):
    pts = np.ascontiguousarray(points, dtype=np.complex128)
    out = np.empty(pts.shape[0], dtype=np.complex128)
    cdef double complex[::1] p = pts
    cdef double complex[::1] o = out
    cdef Py_ssize_t i, n = p.shape[0]
    with nogil:
        for i in range(n):
            o[i] = _log_delta(p[i])
    return out


def delta_logderiv_batch(points):
    pts = np.ascontiguousarray(points, dtype=np.complex128)
    out = np.empty(pts.shape[0], dtype=np.complex128)
    cdef double complex[::1] p = pts
    cdef double complex[::1] o = out
    cdef Py_ssize_t i, n = p.shape[0]
    with nogil:
        for i in range(n):
            o[i] = _dlog_delta(p[i])
    return out


def winding_integrand_batch(points, a):
    pts = np.ascontiguousarray(points, dtype=np.complex128)
    out = np.empty(pts.shape[0], dtype=np.complex128)
    cdef double complex[::1] p = pts
    cdef double complex[::1] o = out
    cdef double complex ca = a
    cdef double complex ratio
    cdef Py_ssize_t i, n = p.shape[0]
    with nogil:
        for i in range(n):
            ratio = ca * cexpz(-_log_delta(p[i]))
            o[i] = _dlog_delta(p[i]) / (1.0 - ratio)
    return out
