"""Acceptance gate: nine end-to-end checks at fixed seeds and tolerances.

Each test prints one PASS/FAIL line with the measured quantities before
asserting, so a full run documents every criterion either way.  These run
the heavy scales (n up to 2e5 samples, 1e7 Monte Carlo draws) and take a
few minutes total.
"""

import math
import time

import numpy as np

from halfdepth.cli import main as cli_main
from halfdepth.depth import depth_2d_exact, depth_bruteforce
from halfdepth.experiment import (ExperimentConfig, convergence_table,
                                  projection_suite, run_counterexample)
from halfdepth.alpha_symmetric import alpha_norm, dual_norm_inf
from halfdepth.stable import StableLaw1D, cdf_sas, sample_sas

SEED = 20240817


def _report(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} {label}: {detail}",
          flush=True)
    assert ok, f"criterion {num} ({label}): {detail}"


def test_criterion_1_oracle_equivalence():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    mismatches = 0
    for trial in range(200):
        n = int(rng.integers(3, 51))
        pts = rng.standard_normal((n, 2)) if trial % 2 == 0 \
            else rng.standard_cauchy((n, 2))
        if trial % 3 == 0 and n >= 6:  # duplicate a block of points
            src = rng.integers(n, size=n // 3)
            dst = rng.integers(n, size=n // 3)
            pts[dst] = pts[src]
        x = pts[int(rng.integers(n))].copy() if trial % 4 == 0 \
            else rng.standard_normal(2)
        if depth_2d_exact(pts, x).count != depth_bruteforce(pts, x).count:
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 10.0
    _report(1, "sweep equals exact oracle", ok,
            f"200 instances, {mismatches} mismatches, {elapsed:.2f}s (< 10s)")


def test_criterion_2_dual_norm_identity():
    rng = np.random.default_rng(SEED + 1)
    t0 = time.perf_counter()
    witness_misses = 0
    floor_violations = 0
    for d in (2, 3, 5):
        dirs = rng.standard_normal((10_000, d))
        for alpha in (0.25, 0.5, 1.0):
            xs = rng.standard_normal((1000, d)) * \
                rng.choice([0.1, 1.0, 10.0], size=(1000, 1))
            norms = alpha_norm(dirs, alpha)
            vals = (dirs @ xs.T) / norms[:, None]
            floors = -np.max(np.abs(xs), axis=1)
            floor_violations += int(np.count_nonzero(
                vals.min(axis=0) < floors - 1e-12))
            for x, floor in zip(xs, floors):
                val, u = dual_norm_inf(x, alpha)
                attained = float(u.u @ x) / float(alpha_norm(u.u, alpha))
                if not (val == floor and attained == floor):
                    witness_misses += 1
    elapsed = time.perf_counter() - t0
    ok = witness_misses == 0 and floor_violations == 0 and elapsed < 30.0
    _report(2, "dual-norm infimum -||x||_inf", ok,
            f"9000 x, witness misses {witness_misses}, "
            f"directions below floor {floor_violations}, {elapsed:.2f}s (< 30s)")


def test_criterion_3_marginal_cdf():
    law = StableLaw1D(alpha=0.5)
    e_zero = abs(cdf_sas(law, 0.0, tol=1e-12) - 0.5)
    e_sym = max(abs(cdf_sas(law, x) + cdf_sas(law, -x) - 1.0)
                for x in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0))
    cauchy = StableLaw1D(alpha=1.0)
    e_cauchy = max(abs(cdf_sas(cauchy, float(x)) - (0.5 + math.atan(x) / math.pi))
                   for x in np.linspace(-10.0, 10.0, 81))
    draws = sample_sas(law, 10_000_000, seed=SEED + 2)
    draws.sort()
    e_mc = max(abs(np.searchsorted(draws, x, side="right") / len(draws)
                   - cdf_sas(law, x)) for x in (-2.0, -1.0, -0.5))
    ok = e_zero < 1e-10 and e_sym < 1e-8 and e_cauchy < 1e-8 and e_mc < 1e-3
    _report(3, "marginal CDF oracle checks", ok,
            f"F(0) err {e_zero:.2e} (<1e-10), symmetry {e_sym:.2e} (<1e-8), "
            f"Cauchy {e_cauchy:.2e} (<1e-8), 1e7-draw MC {e_mc:.2e} (<1e-3)")


def test_criterion_4_sampler_cf_validity():
    from halfdepth.alpha_symmetric import AlphaSymmetricLaw, Kind, cf_multivariate, sample_law

    t0 = time.perf_counter()
    ts = [np.array([1.0, 0.0]), np.array([0.0, 1.0]),
          np.array([1.0, 1.0]), np.array([0.5, 2.0])]
    worst = 0.0
    for kind in (Kind.COUPLED, Kind.INDEPENDENT):
        law = AlphaSymmetricLaw(d=2, alpha=0.5, kind=kind)
        data = sample_law(law, 1_000_000, seed=SEED + 3).data
        for t in ts:
            emp = complex(np.cos(data @ t).mean(), np.sin(data @ t).mean())
            worst = max(worst, abs(emp - cf_multivariate(law, t)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 0.01 and elapsed < 60.0
    _report(4, "sampler matches characteristic function", ok,
            f"n=1e6, worst |emp cf - cf| {worst:.4f} (<= 0.01), "
            f"{elapsed:.1f}s (< 60s)")


def test_criterion_5_projection_ks():
    cfg = ExperimentConfig.default(d=2, n=100_000, seed=SEED + 4)
    checks = projection_suite(cfg, n_directions=20)
    worst = max(c.ks for c in checks)
    threshold = 2.0 / math.sqrt(cfg.n)
    fails = sum(not c.ok for c in checks)
    ok = fails == 0
    _report(5, "scaled projections match marginal", ok,
            f"40 KS tests (20 directions x 2 laws), worst {worst:.5f} "
            f"vs 2/sqrt(n) = {threshold:.5f}, {fails} over")


def test_criterion_6_counterexample_d2():
    t0 = time.perf_counter()
    cfg = ExperimentConfig.default(d=2, n=200_000, seed=SEED + 5)
    rep = run_counterexample(cfg)
    elapsed = time.perf_counter() - t0
    ok = (rep.sup_err_p <= 0.015 and rep.sup_err_q <= 0.015
          and rep.sup_err_pq <= 0.02 and rep.cf_gap >= 0.09
          and rep.cf_gap > 3.0 * rep.cf_gap_se and elapsed < 300.0)
    _report(6, "d=2 depth agreement with distinct laws", ok,
            f"sup_err_P {rep.sup_err_p:.4f} (<=0.015), "
            f"sup_err_Q {rep.sup_err_q:.4f} (<=0.015), "
            f"sup_err_PQ {rep.sup_err_pq:.4f} (<=0.02), "
            f"cf gap {rep.cf_gap:.4f} (>=0.09, se {rep.cf_gap_se:.4f}), "
            f"{elapsed:.0f}s (< 300s)")


def test_criterion_7_d3_spot_check():
    t0 = time.perf_counter()
    cfg = ExperimentConfig.default(d=3, n=100_000, seed=SEED + 6, k=5000)
    rep = run_counterexample(cfg)
    elapsed = time.perf_counter() - t0
    ok = (rep.sup_err_p <= 0.03 and rep.sup_err_q <= 0.03
          and rep.sup_err_pq <= 0.03 and elapsed < 600.0)
    _report(7, "d=3 spot check with direction sampling", ok,
            f"50 points, k=5000: sup_err_P {rep.sup_err_p:.4f}, "
            f"sup_err_Q {rep.sup_err_q:.4f}, sup_err_PQ {rep.sup_err_pq:.4f} "
            f"(all <=0.03), {elapsed:.0f}s (< 600s)")


def test_criterion_8_convergence_trend():
    cfg = ExperimentConfig.default(d=2, n=1000, seed=SEED + 7)
    rows = convergence_table(cfg, [1000, 10_000, 100_000])
    first, last = rows[0], rows[-1]
    ok = (last.sup_err_p < first.sup_err_p and last.sup_err_q < first.sup_err_q)
    _report(8, "sup error shrinks from n=1e3 to n=1e5", ok,
            f"P {first.sup_err_p:.4f} -> {last.sup_err_p:.4f}, "
            f"Q {first.sup_err_q:.4f} -> {last.sup_err_q:.4f}")


def test_criterion_9_verify_determinism(tmp_path):
    outs = []
    for run in ("a", "b"):
        csv = tmp_path / f"{run}.csv"
        js = tmp_path / f"{run}.json"
        code = cli_main(["verify", "--n", "20000", "--seed", str(SEED + 8),
                         "--out-csv", str(csv), "--out-json", str(js)])
        assert code == 0
        outs.append((csv.read_bytes(), js.read_bytes()))
    same_csv = outs[0][0] == outs[1][0]
    same_json = outs[0][1] == outs[1][1]
    ok = same_csv and same_json
    _report(9, "verify outputs byte-identical across runs", ok,
            f"CSV identical: {same_csv}, JSON identical: {same_json}")
