"""Command-line surface.

Subcommands:

    apoints   enumerate a-points, one CSV/JSON row per point
    verify    counting / value-sum / mean checks, JSON report
    curve     clustering-curve samples plus enumerated overlay
    count     argument-principle contour count

Data goes to stdout or --out; diagnostics (nudged contour heights, growth
monitors, solver retries) go to the logging stream on stderr, never into
the data tables.  Exit codes: 0 ok, 2 invalid configuration, 3 solver
non-convergence, 4 a verification check failed.

Config precedence is flags > config file (--config, `key = value` lines,
same names as the flags with underscores) > defaults.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .apoints import SolverConfig, TargetValue, count_contour, enumerate_apoints
from .backend import backend_name
from .errors import ConvergenceError, DomainError, PoleError, QuadratureError
from .verify import clustering_report, curve_sigma, empirical_sum, n_main, sum_main
from .zetacore import zeta_batch

logger = logging.getLogger("zetadelta")

EXIT_OK = 0
EXIT_BAD_CONFIG = 2
EXIT_NO_CONVERGENCE = 3
EXIT_CHECK_FAILED = 4


@dataclass
class RunConfig:
    a_re: float = 1.0
    a_im: float = 0.0
    t_max: float = 500.0
    eta: float = 0.0
    t_min: float | None = None
    format: str = "csv"
    out: str | None = None
    threads: int | None = None

    def validate(self):
        if self.a_re == 0.0 and self.a_im == 0.0:
            raise DomainError(
                "a=0 is excluded: those points are the trivial zeta zeros, "
                "not covered by this tool"
            )
        if self.t_max <= 50.0:
            raise DomainError("t_max must exceed 50")
        if not 0.0 <= self.eta <= 0.9:
            raise DomainError("eta must lie in [0, 0.9]")
        if self.format not in ("csv", "json"):
            raise DomainError(f"unknown format {self.format!r}")

    @property
    def a(self) -> TargetValue:
        return TargetValue.from_complex(complex(self.a_re, self.a_im))

    def solver(self) -> SolverConfig:
        return SolverConfig(t_min=self.t_min)


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _read_config_file(path: str) -> dict:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key = value")
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip().strip("\"'")
    return values


_FIELD_TYPES = {
    "a_re": float,
    "a_im": float,
    "t_max": float,
    "eta": float,
    "t_min": float,
    "format": str,
    "out": str,
    "threads": int,
}


def _merge_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        for key, raw in _read_config_file(args.config).items():
            if key not in _FIELD_TYPES:
                raise DomainError(f"unknown config key {key!r}")
            try:
                setattr(cfg, key, _FIELD_TYPES[key](raw))
            except ValueError as exc:
                raise DomainError(f"bad value for {key!r}: {raw!r}") from exc
    for key in _FIELD_TYPES:
        flag = getattr(args, key, None)
        if flag is not None:
            setattr(cfg, key, flag)
    cfg.validate()
    return cfg


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands

APOINTS_HEADER = "branch,beta,gamma,residual,zeta_re,zeta_im"


def cmd_apoints(cfg: RunConfig) -> int:
    points = enumerate_apoints(cfg.a, cfg.t_max, cfg.solver(), cfg.threads)
    zvals = zeta_batch(np.array([cfg.eta + p.location for p in points]))
    rows = [
        {
            "branch": p.branch,
            "beta": p.beta,
            "gamma": p.gamma,
            "residual": p.residual,
            "zeta_re": z.real,
            "zeta_im": z.imag,
        }
        for p, z in zip(points, zvals)
    ]
    if cfg.format == "csv":
        lines = [APOINTS_HEADER]
        for r in rows:
            lines.append(
                ",".join(
                    [str(r["branch"])]
                    + [_fmt(r[k]) for k in ("beta", "gamma", "residual", "zeta_re", "zeta_im")]
                )
            )
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(json.dumps({"apoints": rows}, indent=2) + "\n", cfg.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    solver = cfg.solver()
    a = cfg.a
    points = enumerate_apoints(a, cfg.t_max, solver, cfg.threads)
    report = empirical_sum(a, cfg.eta, cfg.t_max, solver, threads=cfg.threads,
                           points=points)
    contour = count_contour(a, solver.resolve_t_min(a), cfg.t_max, solver)
    main = n_main(cfg.t_max)
    mean = report.empirical_sum / report.count
    target = complex(a.value) + 1.0
    raw_sum_main = sum_main(a, cfg.eta, cfg.t_max)

    checks = {
        "count_matches_contour": report.count == contour,
        "count_near_main_term": abs(report.count - main)
        <= tol.COUNT_MAIN_TERM_LOG_FACTOR * math.log(cfg.t_max),
    }
    if cfg.eta == 0.0:
        identity = (1.0 + a.value) * main
        checks["sum_main_identity_eta0"] = (
            abs(raw_sum_main - identity) <= tol.SUM_IDENTITY_RTOL * abs(identity)
        )
        checks["mean_within_tolerance"] = (
            abs(mean - target) <= tol.mean_tolerance(cfg.t_max)
        )

    doc = {
        "a_re": a.value.real,
        "a_im": a.value.imag,
        "eta": cfg.eta,
        "t_min": solver.resolve_t_min(a),
        "t_max": cfg.t_max,
        "count": report.count,
        "contour_count": contour,
        "n_main": main,
        "empirical_sum_re": report.empirical_sum.real,
        "empirical_sum_im": report.empirical_sum.imag,
        "sum_main_re": raw_sum_main.real,
        "sum_main_im": raw_sum_main.imag,
        "main_offset_re": report.main_offset.real,
        "main_offset_im": report.main_offset.imag,
        "main_term_re": report.main_term.real,
        "main_term_im": report.main_term.imag,
        "mean_re": mean.real,
        "mean_im": mean.imag,
        "target_re": target.real,
        "target_im": target.imag,
        "abs_error": report.abs_error,
        "normalized_error": report.normalized_error,
        "checks": checks,
    }
    _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    if not all(checks.values()):
        failed = [k for k, ok in checks.items() if not ok]
        logger.warning("verification checks failed: %s", ", ".join(failed))
        return EXIT_CHECK_FAILED
    return EXIT_OK


CURVE_HEADER = "kind,t,sigma,deviation"


def cmd_curve(cfg: RunConfig) -> int:
    a = cfg.a
    modulus = abs(a.value)
    solver = cfg.solver()
    t_lo = max(solver.resolve_t_min(a), 2.0 * math.pi * 1.2)
    grid = np.geomspace(t_lo, cfg.t_max, 200)
    samples = [curve_sigma(modulus, float(t)) for t in grid]
    points = enumerate_apoints(a, cfg.t_max, solver, cfg.threads)
    rows: list[tuple[str, float, float, float | None]] = [
        ("curve", s.t, s.sigma, None) for s in samples
    ]
    for p in points:
        dev = abs(p.beta - curve_sigma(modulus, p.gamma).sigma)
        rows.append(("apoint", p.gamma, p.beta, dev))
    if cfg.format == "csv":
        lines = [CURVE_HEADER]
        for kind, t, sigma, dev in rows:
            lines.append(
                f"{kind},{_fmt(t)},{_fmt(sigma)},{'' if dev is None else _fmt(dev)}"
            )
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        doc = [
            {"kind": kind, "t": t, "sigma": sigma, "deviation": dev}
            for kind, t, sigma, dev in rows
        ]
        _emit(json.dumps({"curve": doc}, indent=2) + "\n", cfg.out)
    return EXIT_OK


def cmd_count(cfg: RunConfig) -> int:
    a = cfg.a
    solver = cfg.solver()
    t0 = solver.resolve_t_min(a)
    n = count_contour(a, t0, cfg.t_max, solver)
    doc = {
        "a_re": a.value.real,
        "a_im": a.value.imag,
        "t_min": t0,
        "t_max": cfg.t_max,
        "count": n,
        "n_main": n_main(cfg.t_max),
    }
    if cfg.format == "csv":
        keys = list(doc)
        text = ",".join(keys) + "\n" + ",".join(
            str(doc[k]) if isinstance(doc[k], int) else _fmt(doc[k]) for k in keys
        ) + "\n"
        _emit(text, cfg.out)
    else:
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetadelta",
        description="a-points of the zeta functional-equation factor and "
        "zeta value statistics on them",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("apoints", "enumerate a-points with zeta values at eta-shifts"),
        ("verify", "run the counting and mean-value verification report"),
        ("curve", "emit clustering-curve samples and point overlay"),
        ("count", "argument-principle contour count"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--a-re", dest="a_re", type=float, default=None,
                       help="real part of the target a")
        p.add_argument("--a-im", dest="a_im", type=float, default=None,
                       help="imaginary part of the target a")
        p.add_argument("--t-max", dest="t_max", type=float, default=None,
                       help="upper height T")
        p.add_argument("--eta", dest="eta", type=float, default=None,
                       help="shift eta in [0, 0.9]")
        p.add_argument("--t-min", dest="t_min", type=float, default=None,
                       help="override the height floor (>= 20)")
        p.add_argument("--format", dest="format", choices=["csv", "json"],
                       default=None)
        p.add_argument("--out", dest="out", default=None,
                       help="output path (stdout when omitted)")
        p.add_argument("--threads", dest="threads", type=int, default=None)
        p.add_argument("--config", dest="config", default=None,
                       help="key = value config file; flags take precedence")
        p.add_argument("--verbose", action="store_true",
                       help="debug-level diagnostics on stderr")
    return parser


_COMMANDS = {
    "apoints": cmd_apoints,
    "verify": cmd_verify,
    "curve": cmd_curve,
    "count": cmd_count,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("kernel backend: %s", backend_name())
    try:
        cfg = _merge_config(args)
    except (DomainError, OSError) as exc:
        logger.error("invalid configuration: %s", exc)
        return EXIT_BAD_CONFIG
    try:
        return _COMMANDS[args.command](cfg)
    except (DomainError, PoleError) as exc:
        logger.error("invalid configuration: %s", exc)
        return EXIT_BAD_CONFIG
    except ConvergenceError as exc:
        logger.error("solver failed: %s", exc)
        return EXIT_NO_CONVERGENCE
    except QuadratureError as exc:
        logger.error("contour integration failed: %s", exc)
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
