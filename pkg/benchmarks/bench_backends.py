#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Covers the workloads that dominate real runs: scalar factor evaluations
(the Newton refinement path), the Euler-Maclaurin zeta sum, the contour
integrand batch, and an end-to-end enumeration.  The compiled backend
wins where Python call overhead and scalar dependency chains dominate;
the numpy fallback stays competitive on wide vector sweeps, so both are
viable.  Thread-scaling of the batch kernel is reported as well (the
compiled loops release the GIL).

    python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import importlib
import time

import numpy as np


def _time(fn, repeats):
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(repeats):
            fn()
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def _backends():
    out = [("python", importlib.import_module("zetadelta._kernels_py"))]
    try:
        out.append(("cython", importlib.import_module("zetadelta._kernels_cy")))
    except ImportError:
        print("note: compiled kernels not built; benchmarking the fallback only")
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    scale = 0.2 if args.quick else 1.0

    backends = _backends()
    rows = []

    from zetadelta.apoints import TargetValue, seed_beta, seed_gamma

    grid = [complex(0.2 + 0.13 * (i % 10), 40.0 + 7.3 * i) for i in range(200)]
    nodes = (-1.0 + 1j * np.linspace(35.0, 1800.0, int(40000 * scale))).astype(complex)
    t_zeta = 2500.0
    n_zeta = int(t_zeta)
    two = TargetValue.from_complex(2.0)
    seeds = []
    for k_idx in range(120, 160):
        g = seed_gamma(two, k_idx)
        seeds.append(complex(seed_beta(two, g), g))

    cases = {
        "scalar log_delta (200 pts)": lambda k: [k.log_delta(s) for s in grid],
        "scalar delta_logderiv (200 pts)": lambda k: [k.delta_logderiv(s) for s in grid],
        "newton refine (40 seeds)": lambda k: [
            k.newton_delta(2.0 + 0j, s0, 1e-10, 40, 1.0) for s0 in seeds
        ],
        f"zeta_em t={t_zeta:g} (10 calls)": lambda k: [
            k.zeta_em(complex(0.5, t_zeta), n_zeta, 10) for _ in range(10)
        ],
        f"winding batch ({len(nodes)} nodes)": lambda k: k.winding_integrand_batch(
            nodes, 2.0 + 0j
        ),
    }

    for label, work in cases.items():
        timings = {}
        for name, kernel in backends:
            timings[name] = _time(lambda: work(kernel), max(1, int(3 * scale)))
        rows.append((label, timings))

    import zetadelta.apoints as apoints_mod
    import zetadelta.zetacore as zetacore_mod

    timings = {}
    original = apoints_mod.kernels
    try:
        for name, kernel in backends:
            apoints_mod.kernels = kernel
            zetacore_mod.kernels = kernel
            timings[name] = _time(
                lambda: apoints_mod.enumerate_apoints(2.0, 2000.0), 1
            )
    finally:
        apoints_mod.kernels = original
        zetacore_mod.kernels = original
    rows.append(("enumerate T=2000 end-to-end", timings))

    width = max(len(r[0]) for r in rows) + 2
    names = [n for n, _ in backends]
    header = "case".ljust(width) + "".join(n.rjust(14) for n in names) + "   speedup"
    print(header)
    print("-" * len(header))
    for label, timings in rows:
        cells = []
        for n in names:
            cells.append(f"{timings[n]*1e3:10.2f} ms" if n in timings else " " * 13)
        speed = ""
        if len(timings) == 2:
            speed = f"{timings['python'] / timings['cython']:8.1f}x"
        print(label.ljust(width) + "".join(cells) + speed)

    if any(n == "cython" for n, _ in backends):
        import os

        k = dict(backends)["cython"]
        pts = (0.5 + 1j * np.linspace(50.0, 3000.0, 4096)).astype(complex)
        ns = np.maximum(30, np.ceil(np.abs(pts.imag))).astype(np.int64)
        logn = np.log(np.arange(1.0, ns.max() + 1.0))
        single = _time(lambda: k.zeta_em_batch(pts, ns, 10, logn), 1)
        from zetadelta.zetacore import zeta_batch

        threaded = _time(lambda: zeta_batch(pts, threads=4), 1)
        cpus = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") \
            else os.cpu_count()
        print(f"\nzeta sweep 4096 pts: single {single*1e3:.1f} ms, "
              f"4 threads {threaded*1e3:.1f} ms on {cpus} available CPU(s) "
              f"(compiled kernels release the GIL; scaling needs >1 CPU)")


if __name__ == "__main__":
    main()
