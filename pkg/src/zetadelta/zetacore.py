"""Riemann zeta evaluation on the strip the verification sweeps need.

Direct Euler-Maclaurin summation for Re s >= fe_switch_sigma, functional
equation continuation delta(s) * zeta(1-s) below it.  Accuracy target is
1e-9 relative on sigma >= -1, |Im s| <= 1e5 with the default config.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ._parallel import ordered_map
from .backend import kernels
from .complexfn import delta
from .errors import DomainError, PoleError

logger = logging.getLogger(__name__)

_TWO_PI = 2.0 * math.pi
_MAX_HEIGHT = 1e5


@dataclass(frozen=True)
class ZetaEvalConfig:
    """Euler-Maclaurin truncation and continuation knobs.

    em_order: number of Bernoulli correction terms, 4..16.
    cutoff_factor: the truncation point is max(30, ceil(cutoff_factor*|Im s|)).
    fe_switch_sigma: real part below which the functional equation is used.
    """

    em_order: int = 10
    cutoff_factor: float = 1.0
    fe_switch_sigma: float = 0.0

    def __post_init__(self):
        if not 4 <= self.em_order <= 16:
            raise DomainError("em_order must be in [4, 16]")
        if self.cutoff_factor < 1.0:
            raise DomainError("cutoff_factor must be >= 1")
        if not -1.0 <= self.fe_switch_sigma < 0.5:
            raise DomainError("fe_switch_sigma must be in [-1, 1/2)")


DEFAULT_ZETA_CONFIG = ZetaEvalConfig()


def truncation_point(t: float, cfg: ZetaEvalConfig) -> int:
    return max(30, int(math.ceil(cfg.cutoff_factor * abs(t))))


def zeta_em(s, cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG, logn=None) -> complex:
    """Euler-Maclaurin value of zeta(s) for Re s >= cfg.fe_switch_sigma."""
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta pole at s=1")
    if s.real < cfg.fe_switch_sigma:
        raise DomainError(f"zeta_em needs Re s >= {cfg.fe_switch_sigma}")
    if abs(s.imag) > _MAX_HEIGHT:
        raise DomainError(f"zeta_em limited to |Im s| <= {_MAX_HEIGHT:g}")
    return kernels.zeta_em(s, truncation_point(s.imag, cfg), cfg.em_order, logn)


def zeta(s, cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG, logn=None) -> complex:
    """zeta(s) anywhere on sigma >= -1 (and below via the continuation)."""
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta pole at s=1")
    if s.real >= cfg.fe_switch_sigma:
        return zeta_em(s, cfg, logn)
    return delta(s) * zeta_em(1.0 - s, cfg, logn)


def zeta_batch(points, cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG,
               threads: int | None = None) -> np.ndarray:
    """zeta over an array of points sharing one log table.

    Points below fe_switch_sigma are routed through the functional
    equation; the direct points go through the batch kernel.  Work is
    split into fixed index chunks for the thread pool, so results are
    identical for any thread count.
    """
    pts = np.asarray(points, dtype=np.complex128)
    out = np.empty(pts.shape, dtype=np.complex128)
    direct = pts.real >= cfg.fe_switch_sigma
    work = pts.copy()
    work[~direct] = 1.0 - work[~direct]
    n_terms = np.maximum(
        30, np.ceil(cfg.cutoff_factor * np.abs(work.imag)).astype(np.int64)
    )
    n_max = int(n_terms.max(initial=30))
    logn = np.log(np.arange(1.0, n_max + 1.0))
    if threads and threads > 1 and len(work) > 1:
        bounds = np.linspace(0, len(work), int(threads) + 1).astype(int)
        chunks = ordered_map(
            lambda se: kernels.zeta_em_batch(
                work[se[0]:se[1]], n_terms[se[0]:se[1]], cfg.em_order, logn
            ),
            zip(bounds[:-1], bounds[1:]),
            threads,
        )
        vals = np.concatenate([c for c in chunks if len(c)])
    else:
        vals = kernels.zeta_em_batch(work, n_terms, cfg.em_order, logn)
    out[direct] = vals[direct]
    if (~direct).any():
        flip = np.nonzero(~direct)[0]
        out[flip] = [delta(complex(pts[i])) * vals[i] for i in flip]
    return out


def growth_monitor(cfg: ZetaEvalConfig = DEFAULT_ZETA_CONFIG, samples: int = 40,
                   t_max: float = 1e4, seed: int = 7) -> float:
    """Soft sanity monitor on the growth of |zeta| across the strip.

    Samples |zeta(sigma+it)| * t^(-(1-sigma)/2 - 0.1) for sigma in [0, 1]
    and |zeta(sigma+it)| * t^(-(1/2-sigma) - 0.1) for sigma in [-1, 0),
    logs the maximum ratio, and returns it.  Logged, never asserted; the
    0.1 exponent pad is a tooling choice.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        t = float(rng.uniform(50.0, t_max))
        sigma = float(rng.uniform(-1.0, 1.0))
        v = abs(zeta(complex(sigma, t), cfg))
        if sigma >= 0.0:
            ratio = v * t ** (-(1.0 - sigma) / 2.0 - 0.1)
        else:
            ratio = v * t ** (-(0.5 - sigma) - 0.1)
        worst = max(worst, ratio)
    logger.info("zeta growth monitor: max normalized ratio %.6g over %d samples",
                worst, samples)
    return worst
