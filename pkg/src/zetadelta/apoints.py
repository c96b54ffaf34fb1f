"""Locating the a-points of the functional-equation factor.

For a target a != 0 the points delta_a = beta_a + i*gamma_a solving
delta(delta_a) = a are seeded from the Stirling-range asymptotics of the
factor (one seed per phase-winding branch k), refined by damped Newton
iteration, and independently recounted by applying the argument principle
to delta(s) - a over a rectangle.

The phase equation behind the seeds: writing a = |a| exp(i*phi),

    gamma * log(2 pi e / gamma) + pi/4 - phi = -2 pi k,
    beta = 1/2 - log|a| / log(gamma / 2 pi),

whose left side is strictly decreasing for gamma > 2 pi, so branches k
and heights gamma correspond one-to-one.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from ._parallel import ordered_map
from .backend import kernels
from .errors import (
    ConvergenceError,
    DomainError,
    DriftError,
    NoSolutionError,
    QuadratureError,
)

logger = logging.getLogger(__name__)

_TWO_PI = 2.0 * math.pi
_TWO_PI_E = 2.0 * math.pi * math.e
_QUARTER_PI = 0.25 * math.pi

# below this height the asymptotic seeds stop being trustworthy
_SEED_HEIGHT_FLOOR = 10.0


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class TargetValue:
    """A nonzero complex target with cached log-modulus and principal phase."""

    value: complex
    log_modulus: float
    phase: float

    @classmethod
    def from_complex(cls, a) -> "TargetValue":
        a = complex(a)
        if a == 0:
            raise DomainError("target a must be nonzero")
        return cls(value=a, log_modulus=math.log(abs(a)), phase=cmath.phase(a))

    @classmethod
    def coerce(cls, a) -> "TargetValue":
        return a if isinstance(a, TargetValue) else cls.from_complex(a)

    def __post_init__(self):
        if self.value == 0:
            raise DomainError("target a must be nonzero")
        recon = cmath.exp(complex(self.log_modulus, self.phase))
        if abs(recon - self.value) > 1e-14 * abs(self.value):
            raise DomainError("inconsistent polar decomposition of target")


@dataclass(frozen=True)
class APoint:
    """One located a-point with its branch index and solver diagnostics."""

    branch: int
    location: complex
    residual: float
    iterations: int

    @property
    def beta(self) -> float:
        return self.location.real

    @property
    def gamma(self) -> float:
        return self.location.imag


@dataclass(frozen=True)
class SolverConfig:
    """Height floor, Newton tolerances and damping.

    t_min=None resolves per target to max(30, 2 pi exp(2|log|a||)), which
    keeps the seeds inside |beta - 1/2| <= 1/2 and clear of the real-axis
    zeros and poles of the factor.
    """

    t_min: float | None = None
    residual_tol: float = 1e-10
    max_iter: int = 40
    damping: float = 1.0

    def __post_init__(self):
        if self.t_min is not None and self.t_min < 20.0:
            raise DomainError("t_min must be >= 20")
        if not 1e-12 <= self.residual_tol <= 1e-6:
            raise DomainError("residual_tol must be in [1e-12, 1e-6]")
        if self.max_iter < 8:
            raise DomainError("max_iter must be >= 8")
        if not 0.0 < self.damping <= 1.0:
            raise DomainError("damping must be in (0, 1]")

    def resolve_t_min(self, a: TargetValue) -> float:
        if self.t_min is not None:
            return self.t_min
        return max(30.0, _TWO_PI * math.exp(2.0 * abs(a.log_modulus)))


DEFAULT_SOLVER = SolverConfig()


def local_gap(gamma: float) -> float:
    """Mean spacing of consecutive points near height gamma."""
    return _TWO_PI / math.log(gamma / _TWO_PI)


# ---------------------------------------------------------------------------
# seeding

def _phase_lhs(t: float) -> float:
    return t * math.log(_TWO_PI_E / t) + _QUARTER_PI


def _branch_coordinate(a: TargetValue, t: float) -> float:
    """Continuous branch index k(t); integers mark seed heights."""
    return (a.phase - _phase_lhs(t)) / _TWO_PI


def seed_gamma(a, k: int) -> float:
    """Height of the branch-k seed: the unique t > 2 pi e with
    t log(2 pi e / t) + pi/4 - phi = -2 pi k."""
    a = TargetValue.coerce(a)
    rhs = a.phase - _TWO_PI * k  # solve _phase_lhs(t) = rhs
    lo = _TWO_PI_E * (1.0 + 1e-12)
    if _phase_lhs(lo) <= rhs:
        raise NoSolutionError(f"branch k={k} below the admissible range")
    hi = 2.0 * _TWO_PI_E
    while _phase_lhs(hi) > rhs:
        hi *= 2.0
        if hi > 1e15:
            raise NoSolutionError("seed height overflow")
    for _ in range(40):  # monotone bisection, then Newton polish
        mid = 0.5 * (lo + hi)
        if _phase_lhs(mid) > rhs:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    for _ in range(4):
        t -= (_phase_lhs(t) - rhs) / (-math.log(t / _TWO_PI))
    return t


def seed_beta(a, gamma: float) -> float:
    """Predicted real part at height gamma: 1/2 - log|a| / log(gamma/2pi)."""
    a = TargetValue.coerce(a)
    if gamma <= _TWO_PI:
        raise DomainError("seed_beta requires gamma > 2 pi")
    return 0.5 - a.log_modulus / math.log(gamma / _TWO_PI)


def _seed_point(a: TargetValue, k: int) -> complex:
    g = seed_gamma(a, k)
    return complex(seed_beta(a, g), g)


# ---------------------------------------------------------------------------
# Newton refinement

def refine(a, seed, cfg: SolverConfig = DEFAULT_SOLVER) -> APoint:
    """Damped Newton on delta(s) - a from the given seed.

    The branch index is recomputed from the phase equation at the
    converged height, so it survives small Newton drift; real drift
    (leaving beta in (-1, 2) or jumping past half the local spacing)
    raises DriftError.
    """
    a = TargetValue.coerce(a)
    seed = complex(seed)
    if seed.imag < _SEED_HEIGHT_FLOOR:
        raise DomainError(f"seed height {seed.imag:g} below asymptotic range")
    s, res, its = kernels.newton_delta(
        a.value, seed, cfg.residual_tol, cfg.max_iter, cfg.damping
    )
    if not (math.isfinite(s.real) and math.isfinite(s.imag)) or res > cfg.residual_tol:
        raise ConvergenceError(
            f"no convergence from seed {seed:.6g} after {its} iterations "
            f"(residual {res:.3g})"
        )
    if not -1.0 < s.real < 2.0:
        raise DriftError(f"converged beta {s.real:.6g} outside (-1, 2)")
    if abs(s.imag - seed.imag) > tol.SEED_DRIFT_FRACTION * local_gap(seed.imag):
        raise DriftError(
            f"height drifted {abs(s.imag - seed.imag):.3g} from seed {seed.imag:.6g}"
        )
    k = round(_branch_coordinate(a, s.imag))
    return APoint(branch=k, location=s, residual=res, iterations=its)


def _refine_branch(a: TargetValue, k: int, cfg: SolverConfig) -> APoint:
    seed = _seed_point(a, k)
    try:
        return refine(a, seed, cfg)
    except ConvergenceError:
        damped = SolverConfig(
            t_min=cfg.t_min,
            residual_tol=cfg.residual_tol,
            max_iter=2 * cfg.max_iter,
            damping=0.5 * cfg.damping,
        )
        try:
            return refine(a, seed, damped)
        except ConvergenceError as exc:
            raise ConvergenceError(f"branch k={k}: {exc}") from exc


# ---------------------------------------------------------------------------
# enumeration

def enumerate_apoints(a, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
                      threads: int | None = None) -> list[APoint]:
    """All a-points with gamma in (t_min, T], sorted by increasing gamma."""
    a = TargetValue.coerce(a)
    t_min = cfg.resolve_t_min(a)
    if T <= t_min:
        raise DomainError(f"T={T:g} must exceed the height floor {t_min:g}")

    k_lo = math.floor(_branch_coordinate(a, t_min)) - 2
    k_hi = math.ceil(_branch_coordinate(a, T)) + 2
    k_first_valid = math.floor((a.phase - _QUARTER_PI) / _TWO_PI) + 1
    k_lo = max(k_lo, k_first_valid)

    points = ordered_map(
        lambda k: _refine_branch(a, k, cfg), range(k_lo, k_hi + 1), threads
    )
    kept: list[APoint] = []
    for p in sorted(points, key=lambda p: p.gamma):
        if not t_min < p.gamma <= T:
            continue
        if kept and p.gamma - kept[-1].gamma < tol.DUPLICATE_DISTANCE:
            logger.debug("dropping duplicate at gamma=%.9f", p.gamma)
            continue
        kept.append(p)
    for prev, cur in zip(kept, kept[1:]):
        if cur.gamma <= prev.gamma:
            raise ConvergenceError("enumerated heights are not strictly increasing")
    return kept


# ---------------------------------------------------------------------------
# argument-principle contour counting

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)
_MAX_BATCH = 1 << 15


def _integrand(points: np.ndarray, a: TargetValue) -> np.ndarray:
    if len(points) <= _MAX_BATCH:
        return kernels.winding_integrand_batch(points, a.value)
    out = np.empty(len(points), dtype=np.complex128)
    for i in range(0, len(points), _MAX_BATCH):
        out[i : i + _MAX_BATCH] = kernels.winding_integrand_batch(
            points[i : i + _MAX_BATCH], a.value
        )
    return out


def _edge_integral(z0: complex, z1: complex, panels: int, a: TargetValue) -> complex:
    edges = np.linspace(0.0, 1.0, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    x = (mids[:, None] + half * _GL_NODES[None, :]).ravel()
    w = np.broadcast_to(half * _GL_WEIGHTS, (panels, len(_GL_WEIGHTS))).ravel()
    dz = z1 - z0
    vals = _integrand(z0 + dz * x, a)
    return dz * complex(np.sum(w * vals))


def _nearby_heights(a: TargetValue, t_cut: float, cfg: SolverConfig) -> list[float]:
    """Point heights within ~4 of t_cut; at-risk seeds are Newton-refined."""
    ks = range(
        math.floor(_branch_coordinate(a, max(t_cut - 4.0, _TWO_PI_E * 1.0001))),
        math.ceil(_branch_coordinate(a, t_cut + 4.0)) + 1,
    )
    out = []
    for k in ks:
        try:
            g = seed_gamma(a, k)
        except NoSolutionError:
            continue
        if abs(g - t_cut) <= 0.2 and g >= _SEED_HEIGHT_FLOOR:
            try:
                g = refine(a, complex(seed_beta(a, g), g), cfg).gamma
            except (ConvergenceError, DomainError):
                pass
        out.append(g)
    return out


def _cut_height(a: TargetValue, t_cut: float, cfg: SolverConfig) -> float:
    """A crossing height separating exactly the same point sets as t_cut,
    placed mid-gap between the bracketing points (refined where the
    prediction alone cannot decide which side of t_cut a point falls on).

    Mid-gap placement keeps the edge ~half a mean spacing from every
    point, far beyond the c/log(T) separation the quadrature needs."""
    heights = _nearby_heights(a, t_cut, cfg)
    below = max((g for g in heights if g <= t_cut), default=t_cut - 4.0)
    above = min((g for g in heights if g > t_cut), default=t_cut + 4.0)
    h = 0.5 * (below + above)
    margin = min(h - below, above - h)
    needed = tol.CONTOUR_EDGE_MARGIN_C / math.log(max(t_cut, 8.0))
    if margin < needed:
        logger.warning(
            "contour edge at %.6f sits %.2e from a point (target %.2e)",
            h, margin, needed,
        )
    if h != t_cut:
        logger.debug("contour edge nudged %.6f -> %.6f", t_cut, h)
    return h


def winding_number(a, t0: float, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
                   left_sigma: float = -1.0) -> tuple[complex, float, float]:
    """Raw winding value of delta(s) - a over the rectangle, before rounding.

    Returns (winding, bottom_height, top_height).  Both horizontal edges
    are nudged to the middle of the gap between the points bracketing the
    requested height, so the contour and an enumeration up to T cut
    between the same neighbours and the counted sets agree exactly.
    """
    a = TargetValue.coerce(a)
    if T <= t0:
        raise DomainError("T must exceed t0")
    if t0 < 20.0:
        raise DomainError("contour bottom must be at height >= 20")
    bottom = _cut_height(a, t0, cfg)
    top = _cut_height(a, T, cfg)

    corners = [
        complex(left_sigma, bottom),
        complex(2.0, bottom),
        complex(2.0, top),
        complex(left_sigma, top),
    ]
    log_top = math.log(top / _TWO_PI)
    vertical_panels = max(8, math.ceil((top - bottom) * log_top / _TWO_PI * 1.5))
    horizontal_panels = max(8, math.ceil(3.0 * log_top))
    panels = [horizontal_panels, vertical_panels, horizontal_panels, vertical_panels]

    def total(scale: int) -> complex:
        s = 0.0 + 0.0j
        for (z0, z1), m in zip(zip(corners, corners[1:] + corners[:1]), panels):
            s += _edge_integral(z0, z1, m * scale, a)
        return s / (2j * math.pi)

    prev = total(1)
    scale = 2
    for _ in range(tol.WINDING_MAX_DOUBLINGS):
        cur = total(scale)
        if abs(cur - prev) <= tol.WINDING_STABILIZE_TOL:
            return cur, bottom, top
        prev = cur
        scale *= 2
    raise QuadratureError(
        f"winding value failed to stabilize (last delta {abs(cur - prev):.3g}); "
        "an a-point may sit too close to the contour"
    )


def count_contour(a, t0: float, T: float, cfg: SolverConfig = DEFAULT_SOLVER,
                  left_sigma: float = -1.0) -> int:
    """Argument-principle count of a-points inside the rectangle
    [left_sigma, 2] x [t0, T] (heights nudged as in winding_number)."""
    w, _, _ = winding_number(a, t0, T, cfg, left_sigma)
    n = round(w.real)
    if abs(w - n) > tol.WINDING_INTEGER_TOL:
        raise QuadratureError(
            f"winding value {w:.6g} is not within {tol.WINDING_INTEGER_TOL:g} "
            "of an integer; an a-point sits too close to the contour"
        )
    if n < 0:
        raise QuadratureError(f"negative winding count {n}")
    return n
