"""End-to-end acceptance checks.

Each test prints a single PASS/FAIL line for its criterion so the
overall verdict can be read off the test log. The heavyweight criteria
(scale-factor reproduction, the alpha-transition sweep) take several
minutes combined.
"""

import subprocess
import sys

import numpy as np
import pytest
from scipy.stats import spearmanr

from bbobmix.affine import combine_pairwise, sample_instance, sample_weights
from bbobmix.calibration import (
    Aggregator,
    DEFAULT_SCALE_FACTORS,
    compare_to_default,
    compute_scale_table,
)
from bbobmix.components import create_component
from bbobmix.performance import Algorithm, alpha_sweep, aocc
from bbobmix.suite import generate_suite
from bbobmix.affine import make_many_affine


def _report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_criterion_1_scale_factor_reproduction():
    table = compute_scale_table([2, 3, 5, 10, 20], 50_000, 12345, Aggregator.MID_RANGE)
    dev, flagged = compare_to_default(table)
    within = int(np.sum(~flagged))
    for fid in np.flatnonzero(flagged):
        print(f"  F{fid + 1}: computed {table.values[fid]:.1f} vs default "
              f"{DEFAULT_SCALE_FACTORS[fid]:.1f} ({dev[fid] * 100:.1f}% off)")
    _report(
        "criterion 1: scale factors within 15% of defaults for >= 20/24 functions",
        within >= 20,
        f"{within}/24 within tolerance",
    )


def test_criterion_2_optimum_invariant():
    ok = True
    detail = ""
    for dim in (2, 5):
        for k in range(100):
            rng = np.random.default_rng(np.random.SeedSequence([dim, k]))
            w, inst, x_opt = sample_instance(rng, dim)
            prob = make_many_affine(w, inst, x_opt, dim, DEFAULT_SCALE_FACTORS)
            if prob.evaluate(x_opt) != 1e-8:
                ok, detail = False, f"dim {dim} problem {k}: value at optimum != 1e-8"
                break
            pts = rng.uniform(-5, 5, (10_000, dim))
            if np.min(prob.evaluate(pts)) < 1e-8:
                ok, detail = False, f"dim {dim} problem {k}: point below 1e-8"
                break
        if not ok:
            break
    _report("criterion 2: exact optimum value and global lower bound", ok, detail)


def test_criterion_3_weight_sampler_statistics():
    rng = np.random.default_rng(2024)
    counts = []
    ok = True
    detail = ""
    for _ in range(10_000):
        w = sample_weights(rng, 0.85)
        if abs(w.sum() - 1.0) > 1e-12:
            ok, detail = False, "weight sum off by more than 1e-12"
            break
        c = int(np.count_nonzero(w))
        if c < 2:
            ok, detail = False, "fewer than 2 positive weights"
            break
        counts.append(c)
    if ok:
        mean_count = float(np.mean(counts))
        ok = 3.2 <= mean_count <= 4.0
        detail = f"mean positive count {mean_count:.3f}"
    _report("criterion 3: weight sampler statistics", ok, detail)


def test_criterion_4_aocc_values_and_monotonicity():
    ok = (
        aocc(np.full(10, 1e-8)) == 1.0
        and aocc(np.full(10, 1e2)) == 0.0
        and abs(aocc(np.array([1e-3])) - 0.5) < 1e-15
    )
    detail = "unit values" if not ok else ""
    if ok:
        rng = np.random.default_rng(7)
        for _ in range(1_000):
            n = int(rng.integers(1, 50))
            better = np.sort(10.0 ** rng.uniform(-9, 3, n))[::-1]
            worse = better * 10.0 ** rng.uniform(0.0, 2.0, n)
            if aocc(better) < aocc(worse):
                ok, detail = False, "dominating trace scored lower"
                break
    _report("criterion 4: AOCC unit values and monotonicity", ok, detail)


def test_criterion_5_boundary_recovery():
    rng = np.random.default_rng(55)
    ok = True
    detail = ""
    for _ in range(10):
        f1, f2 = rng.integers(1, 25, 2)
        dim = 3
        pts = rng.uniform(-5, 5, (1_000, dim))
        for alpha in (0.0, 1.0):
            pw = combine_pairwise(int(f1), 1, int(f2), 1, alpha, dim)
            cp = pw.first if alpha == 1.0 else pw.second
            shifted = pts - pw.x_opt + cp.optimum_location
            expected = np.maximum(cp.evaluate_raw(shifted), 1e-8)
            if not np.array_equal(pw.evaluate(pts), expected):
                ok, detail = False, f"pair ({f1}, {f2}) alpha {alpha}"
                break
        if not ok:
            break
    _report("criterion 5: pairwise boundary recovery at alpha 0 and 1", ok, detail)


def test_criterion_6_permutation_invariance():
    # the blend is a sum over the active slots, so it must not depend on
    # the order in which the components are held; we shuffle the stored
    # component list and require bit-identical evaluation
    rng = np.random.default_rng(66)
    ok = True
    detail = ""
    for k in range(50):
        dim = 3
        w, inst, x_opt = sample_instance(rng, dim)
        prob = make_many_affine(w, inst, x_opt, dim, DEFAULT_SCALE_FACTORS)
        prob_perm = make_many_affine(w, inst, x_opt, dim, DEFAULT_SCALE_FACTORS)
        order = rng.permutation(len(prob_perm._active))
        prob_perm._active = [prob_perm._active[i] for i in order]
        pts = rng.uniform(-5, 5, (1_000, dim))
        if not np.array_equal(prob.evaluate(pts), prob_perm.evaluate(pts)):
            ok, detail = False, f"problem {k}"
            break
    _report("criterion 6: permutation invariance of the blend", ok, detail)


def test_criterion_7_alpha_transition():
    alphas = np.linspace(0.0, 1.0, 21)
    _, grid = alpha_sweep(
        21, 1, alphas, 2, runs=50, instances=25, budget=4_000,
        algo=Algorithm.ONE_PLUS_ONE_ES, seed=7,
    )
    means = grid.mean(axis=1)
    rho = float(spearmanr(alphas, means).statistic)
    easy_beats_hard = means[0] > means[-1]
    ok = rho <= -0.8 and easy_beats_hard
    _report(
        "criterion 7: smooth easy-to-hard transition along alpha",
        ok,
        f"spearman {rho:.3f}, AOCC {means[0]:.3f} at alpha 0 vs {means[-1]:.3f} at alpha 1",
    )


def test_criterion_8_end_to_end_determinism(tmp_path):
    files = {}
    for tag in ("first", "second"):
        suite = tmp_path / f"suite_{tag}.json"
        results = tmp_path / f"results_{tag}.csv"
        for cmd in (
            ["generate", "--count", "5", "--dim", "2", "--seed", "31",
             "--out", str(suite)],
            ["run", "--suite", str(suite), "--algo", "one-plus-one-es",
             "--runs", "5", "--budget-multiplier", "100", "--seed", "13",
             "--out", str(results)],
        ):
            r = subprocess.run(
                [sys.executable, "-m", "bbobmix.cli", *cmd],
                capture_output=True, text=True,
            )
            assert r.returncode == 0, r.stderr
        files[tag] = (suite.read_bytes(), results.read_bytes())
    ok = files["first"] == files["second"]
    _report("criterion 8: byte-identical generate and run pipelines", ok)
