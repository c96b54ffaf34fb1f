"""Acceptance suite.

Each criterion runs at its stated tolerance and prints one PASS/FAIL
line (visible with pytest -s / -rA).  The enumerations are shared
through the session-scoped cache, so the whole suite stays well inside
the runtime budgets asserted below.
"""

import math
import time

import numpy as np
import pytest

import zetadelta as zd
from zetadelta.cli import main
from zetadelta.zetacore import zeta_batch

from oracles import theta_root

TWO_PI = 2.0 * math.pi


def _report(cid, ok, detail):
    print(f"\n[criterion {cid}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {cid} failed: {detail}"


def test_criterion_1_functional_equation_identity():
    start = time.monotonic()
    rng = np.random.default_rng(1)
    s = np.array(
        [complex(rng.uniform(-1.0, 2.0), rng.uniform(20.0, 5000.0))
         for _ in range(1000)]
    )
    zs = zeta_batch(s)
    zr = zeta_batch(1.0 - s)
    worst_fe = 0.0
    worst_rec = 0.0
    for si, zi, zri in zip(s, zs, zr):
        d = zd.delta(complex(si))
        dr = zd.delta(complex(1.0 - si))
        worst_fe = max(worst_fe, abs(zi - d * zri) / abs(zi))
        worst_rec = max(worst_rec, abs(d * dr - 1.0))
    elapsed = time.monotonic() - start
    ok = worst_fe <= 1e-8 and worst_rec <= 1e-9 and elapsed < 30.0
    _report(
        1, ok,
        f"functional equation rel dev {worst_fe:.2e} (<=1e-8), "
        f"reciprocal identity dev {worst_rec:.2e} (<=1e-9), {elapsed:.1f}s (<30s)",
    )


def test_criterion_2_critical_line_modulus():
    ts = np.linspace(20.0, 1e4, 1000)
    worst = max(abs(abs(zd.delta(complex(0.5, t))) - 1.0) for t in ts)
    _report(2, worst <= 1e-10, f"max | |delta(1/2+it)|-1 | = {worst:.2e} (<=1e-10)")


def test_criterion_3_counting_main_term(apoint_cache):
    start = time.monotonic()
    lines = []
    ok = abs(zd.n_main(100.0) - 28.1) <= 0.05
    lines.append(f"n_main(100)={zd.n_main(100.0):.4f} (~28.1)")
    for a in (1.0 + 0j, 1j, 2.0 + 0j, -1.0 + 0j):
        for T in (100.0, 500.0, 2000.0):
            n_enum = len(apoint_cache(a, T))
            n_cont = zd.count_contour(a, 30.0, T)
            bound = 10.0 * math.log(T)
            gap = abs(n_enum - zd.n_main(T))
            good = n_enum == n_cont and gap <= bound
            ok = ok and good
            lines.append(
                f"a={a:g} T={T:g}: enum={n_enum} contour={n_cont} "
                f"|count-main|={gap:.1f}<={bound:.1f}"
            )
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 120.0
    _report(3, ok, "; ".join(lines) + f"; {elapsed:.1f}s (<2min)")


def test_criterion_4_mean_value_law(apoint_cache):
    start = time.monotonic()
    lines = []
    ok = True
    for a in (1.0 + 0j, 1j, 2.0 + 0j):
        target = a + 1.0
        pts = apoint_cache(a, 5000.0)
        err_hi = abs(zd.mean_zeta(a, 5000.0, points=pts) - target)
        err_lo = abs(
            zd.mean_zeta(a, 500.0, points=[p for p in pts if p.gamma <= 500.0])
            - target
        )
        good = err_hi <= 0.1 and err_hi <= 1.5 * err_lo
        ok = ok and good
        lines.append(f"a={a:g}: |mean-({target:g})|={err_hi:.2e}<=0.1, "
                     f"err(500)={err_lo:.2e}")
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 600.0
    _report(4, ok, "; ".join(lines) + f"; {elapsed:.1f}s (<10min)")


def test_criterion_5_shifted_sum_error_growth(apoint_cache):
    pts = apoint_cache(1.0, 2000.0)
    r500 = zd.empirical_sum(
        1.0, 0.5, 500.0, points=[p for p in pts if p.gamma <= 500.0]
    )
    r2000 = zd.empirical_sum(1.0, 0.5, 2000.0, points=pts)
    c_fit = r500.abs_error / 500.0**0.6
    bound = c_fit * 2000.0**0.6
    ok = r2000.abs_error <= bound
    _report(
        5, ok,
        f"E(500)={r500.abs_error:.4f} fits C={c_fit:.4g}; "
        f"E(2000)={r2000.abs_error:.4f} <= {bound:.4f}",
    )


def test_criterion_6_reflected_mean(apoint_cache):
    r = zd.reflected_mean(2.0, 5000.0, points=apoint_cache(2.0, 5000.0))
    err = abs(r - 1.5)
    _report(6, err <= 0.1, f"|reflected mean - 1.5| = {err:.2e} (<=0.1)")


def test_criterion_7_clustering_blocks(apoint_cache):
    pts = [p for p in apoint_cache(2.0, 5000.0) if p.gamma <= 3840.0]
    blocks = zd.clustering_report(2.0, 3840.0, points=pts)
    ok = True
    details = []
    prev = None
    for (lo, hi), dev in blocks:
        if lo >= 200.0:
            curve = math.log(2.0) / math.log(lo / TWO_PI)
            good = abs(dev - curve) <= 0.02
            ok = ok and good
            details.append(f"[{lo:.0f},{hi:.0f}): dev={dev:.4f} curve={curve:.4f}")
        if prev is not None:
            ok = ok and dev < prev
        prev = dev
    _report(7, ok, "decreasing maxima; " + "; ".join(details))


def test_criterion_8_gram_height_cross_oracle(apoint_cache):
    pts = apoint_cache(1.0, 100.0)[:5]
    ok = True
    details = []
    for p in pts:
        root = theta_root(zd.theta_rs, p.branch, p.gamma - 0.5, p.gamma + 0.5)
        dev = abs(p.gamma - root)
        ok = ok and dev <= 1e-8
        details.append(f"k={p.branch}: |gamma-root|={dev:.1e}")
    _report(8, ok, "; ".join(details) + " (<=1e-8)")


def test_criterion_9_thread_determinism(tmp_path):
    outs = []
    for threads in ("1", "8"):
        path = tmp_path / f"report_{threads}.json"
        code = main([
            "verify", "--a-re", "0", "--a-im", "1", "--t-max", "500",
            "--threads", threads, "--out", str(path),
        ])
        assert code == 0
        outs.append(path.read_bytes())
    ok = outs[0] == outs[1]
    _report(9, ok, f"verify reports byte-identical across thread counts "
                   f"({len(outs[0])} bytes)")
