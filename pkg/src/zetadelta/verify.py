"""Empirical verification of the counting and value-sum asymptotics.

The counting main term, the three-term main expression for the shifted
value sums, the mean-value law (mean of zeta over the a-points tends to
a+1), its reflected counterpart (1 + 1/a), and the clustering of the
points around the critical line are all checked at desk scale here;
tolerances live in tolerances.py.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .apoints import (
    APoint,
    SolverConfig,
    DEFAULT_SOLVER,
    TargetValue,
    enumerate_apoints,
)
from .errors import DomainError
from .zetacore import DEFAULT_ZETA_CONFIG, ZetaEvalConfig, zeta_batch

_TWO_PI = 2.0 * math.pi
_TWO_PI_E = 2.0 * math.pi * math.e


@dataclass(frozen=True)
class SumReport:
    """Partial sum of zeta(eta + delta_a) against its main term.

    The enumeration starts at the height floor t_min, not at 0, so the
    comparison main term is the increment sum_main(T) - sum_main(t_min);
    the subtracted constant is reported in `main_offset`.
    """

    a: TargetValue
    eta: float
    T: float
    count: int
    empirical_sum: complex
    main_term: complex
    main_offset: complex
    abs_error: float
    normalized_error: float  # abs_error / T^0.6


@dataclass(frozen=True)
class CurveSample:
    """One (t, sigma) sample of the clustering curve for a fixed modulus."""

    t: float
    sigma: float

    def __post_init__(self):
        if self.t <= _TWO_PI:
            raise DomainError("curve samples need t > 2 pi")


def n_main(T: float) -> float:
    """Counting main term (T/2pi) log(T/(2 pi e))."""
    if T < _TWO_PI_E:
        raise DomainError("n_main requires T >= 2 pi e")
    return T / _TWO_PI * math.log(T / _TWO_PI_E)


def sum_main(a, eta: float, T: float) -> complex:
    """Main term of the shifted value sum:

    (T/2pi) log(T/2pi e) + a/(1-eta) (T/2pi)^(1-eta) log(T/2pi)
                         - a/(1-eta)^2 (T/2pi)^(1-eta)
    """
    a = TargetValue.coerce(a)
    if not 0.0 <= eta <= 0.9:
        raise DomainError("eta must lie in [0, 0.9]")
    if T < _TWO_PI_E:
        raise DomainError("sum_main requires T >= 2 pi e")
    x = T / _TWO_PI
    one = 1.0 - eta
    pw = x ** one
    return (
        n_main(T)
        + a.value / one * pw * math.log(x)
        - a.value / (one * one) * pw
    )


def _zeta_values(points: list[APoint], eta: float, zeta_cfg: ZetaEvalConfig,
                 reflect: bool = False, threads: int | None = None) -> np.ndarray:
    locs = np.array([p.location for p in points], dtype=np.complex128)
    args = (1.0 - locs) if reflect else (eta + locs)
    return zeta_batch(args, zeta_cfg, threads)


def _kahan_complex_sum(values: np.ndarray) -> complex:
    # Neumaier's compensated form: robust also when a term dwarfs the sum
    sr = cr = si = ci = 0.0
    for v in values:
        x = v.real
        t = sr + x
        cr += (sr - t) + x if abs(sr) >= abs(x) else (x - t) + sr
        sr = t
        x = v.imag
        t = si + x
        ci += (si - t) + x if abs(si) >= abs(x) else (x - t) + si
        si = t
    return complex(sr + cr, si + ci)


def empirical_sum(a, eta: float, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
                  zeta_cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG,
                  threads: int | None = None,
                  points: list[APoint] | None = None) -> SumReport:
    """Compensated sum of zeta(eta + delta_a) over the enumerated points,
    reported against the main term.

    `points` may carry a previously enumerated list for the same (a, cfg)
    to avoid re-running the solver.
    """
    a = TargetValue.coerce(a)
    offset = sum_main(a, eta, cfg.resolve_t_min(a))
    main = sum_main(a, eta, T) - offset  # validates eta and T
    if points is None:
        points = enumerate_apoints(a, T, cfg, threads)
    total = _kahan_complex_sum(_zeta_values(points, eta, zeta_cfg, threads=threads))
    abs_error = abs(total - main)
    return SumReport(
        a=a,
        eta=eta,
        T=T,
        count=len(points),
        empirical_sum=total,
        main_term=main,
        main_offset=offset,
        abs_error=abs_error,
        normalized_error=abs_error / T ** 0.6,
    )


def mean_zeta(a, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
              zeta_cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG,
              threads: int | None = None,
              points: list[APoint] | None = None) -> complex:
    """Empirical mean of zeta at the a-points up to height T (limit: a+1)."""
    a = TargetValue.coerce(a)
    if T <= cfg.resolve_t_min(a) + 50.0:
        raise DomainError("T too close to the height floor for a mean")
    report = empirical_sum(a, 0.0, T, cfg, zeta_cfg, threads, points)
    return report.empirical_sum / report.count


def reflected_mean(a, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
                   zeta_cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG,
                   threads: int | None = None,
                   points: list[APoint] | None = None) -> complex:
    """Empirical mean of zeta(1 - delta_a) (limit: 1 + 1/a)."""
    a = TargetValue.coerce(a)
    if T <= cfg.resolve_t_min(a) + 50.0:
        raise DomainError("T too close to the height floor for a mean")
    if points is None:
        points = enumerate_apoints(a, T, cfg, threads)
    total = _kahan_complex_sum(
        _zeta_values(points, 0.0, zeta_cfg, reflect=True, threads=threads)
    )
    return total / len(points)


def curve_sigma(modulus: float, t: float) -> CurveSample:
    """Clustering-curve sample sigma = 1/2 - log(modulus)/log(t/2pi)."""
    if modulus <= 0.0:
        raise DomainError("curve modulus must be positive")
    if t <= _TWO_PI * 1.1:
        raise DomainError("curve samples need t > 2.2 pi")
    return CurveSample(t=t, sigma=0.5 - math.log(modulus) / math.log(t / _TWO_PI))


def clustering_report(a, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
                      threads: int | None = None,
                      points: list[APoint] | None = None
                      ) -> list[tuple[tuple[float, float], float]]:
    """Per dyadic height block [2^j t_min, 2^(j+1) t_min), the maximum
    |beta - 1/2|; the maxima decrease as the blocks climb."""
    a = TargetValue.coerce(a)
    t_min = cfg.resolve_t_min(a)
    if T < 4.0 * t_min:
        raise DomainError("clustering needs T >= 4 t_min")
    if points is None:
        points = enumerate_apoints(a, T, cfg, threads)
    blocks: list[tuple[tuple[float, float], float]] = []
    lo = t_min
    while lo < T:
        hi = min(2.0 * lo, T)
        devs = [abs(p.beta - 0.5) for p in points if lo <= p.gamma < hi]
        if devs:
            blocks.append(((lo, hi), max(devs)))
        lo = hi
    return blocks
