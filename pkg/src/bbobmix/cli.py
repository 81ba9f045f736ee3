"""Command-line interface: suite generation, point evaluation,
scale-factor calibration, benchmark runs, and alpha sweeps.

All failures exit nonzero with a single `error: <message>` line on
stderr. Numeric output uses repr-shortest decimals, which carry at
least 15 significant digits for doubles.
"""

from __future__ import annotations

import io
import json
import os
import sys

import click
import numpy as np

from .affine import N_COMPONENTS
from .calibration import (
    Aggregator,
    DEFAULT_CALIBRATION_DIMS,
    DEFAULT_SCALE_FACTORS,
    compare_to_default,
    compute_scale_table,
)
from .performance import (
    Algorithm,
    aocc,
    alpha_sweep,
    default_budget,
    mean_aocc,
    run_optimizer_batch,
    trace_csv_text,
)
from .suite import (
    atomic_write_text,
    generate_suite,
    load_suite,
    save_suite,
    scale_table_to_json,
)

_AGGREGATORS = {a.value: a for a in Aggregator}
_ALGORITHMS = {a.value: a for a in Algorithm}


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Generate, evaluate, and benchmark blended box-constrained
    minimization problems."""


@main.command()
@click.option("--count", type=int, default=1, show_default=True, help="Number of problems.")
@click.option("--dim", type=int, required=True, help="Problem dimension.")
@click.option("--seed", type=int, required=True, help="Master seed.")
@click.option("--threshold", type=float, default=0.85, show_default=True)
@click.option("--instance-range", type=int, default=100, show_default=True)
@click.option("--scale-table", "scale_table_file", type=click.Path(exists=True), default=None,
              help="Scale-table JSON; defaults to the built-in factors.")
@click.option("--out", required=True, type=click.Path(), help="Output suite file.")
def generate(count, dim, seed, threshold, instance_range, scale_table_file, out):
    """Sample a suite of random problems and write it as JSON."""
    try:
        scale_factors = None
        if scale_table_file is not None:
            with open(scale_table_file) as fh:
                doc = json.load(fh)
            scale_factors = np.asarray(doc["scale_factors"], dtype=float)
            if scale_factors.shape != (N_COMPONENTS,):
                raise ValueError(f"scale table must have {N_COMPONENTS} entries")
        suite = generate_suite(count, dim, seed, threshold, instance_range, scale_factors)
        save_suite(suite, out)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        _fail(str(exc))
    click.echo(f"wrote {count} problems to {out}")


def _read_points(path: str, dim: int) -> np.ndarray:
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                vals = [float(tok) for tok in line.split(",")]
            except ValueError:
                raise ValueError(f"{path}:{lineno}: malformed row")
            if len(vals) != dim or not all(np.isfinite(vals)):
                raise ValueError(
                    f"{path}:{lineno}: expected {dim} finite columns, got {len(vals)}"
                )
            rows.append(vals)
    if not rows:
        raise ValueError(f"{path}: no points found")
    return np.asarray(rows)


@main.command()
@click.option("--suite", "suite_file", required=True, type=click.Path(exists=True))
@click.option("--problem-id", type=int, required=True)
@click.option("--points", "points_file", required=True, type=click.Path(exists=True),
              help="Headerless CSV, one point per row.")
@click.option("--out", required=True, type=click.Path(), help="Output values file.")
def evaluate(suite_file, problem_id, points_file, out):
    """Evaluate one suite problem on a file of points."""
    try:
        suite = load_suite(suite_file)
        matches = [r for r in suite.problems if r.problem_id == problem_id]
        if not matches:
            raise ValueError(f"problem_id {problem_id} not in suite")
        problem = matches[0].to_problem(suite.dim)
        pts = _read_points(points_file, suite.dim)
        values = problem.evaluate(pts)
        text = "".join(f"{repr(float(v))}\n" for v in np.atleast_1d(values))
        atomic_write_text(out, text)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        _fail(str(exc))
    click.echo(f"wrote {len(pts)} values to {out}")


@main.command()
@click.option("--dims", default=",".join(str(d) for d in DEFAULT_CALIBRATION_DIMS),
              show_default=True, help="Comma-separated dimensions.")
@click.option("--samples", type=int, default=50000, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--aggregator", type=click.Choice(sorted(_AGGREGATORS)), default="mid-range",
              show_default=True)
@click.option("--out", required=True, type=click.Path(), help="Output scale-table file.")
def calibrate(dims, samples, seed, aggregator, out):
    """Recompute per-function scale factors and compare them to the
    built-in defaults."""
    try:
        dim_list = [int(tok) for tok in dims.split(",") if tok.strip()]
        table = compute_scale_table(dim_list, samples, seed, _AGGREGATORS[aggregator])
        dev, flagged = compare_to_default(table)
        comparison = [
            {
                "function": fid,
                "default": float(DEFAULT_SCALE_FACTORS[fid - 1]),
                "computed": float(table.values[fid - 1]),
                "relative_deviation": float(dev[fid - 1]),
                "flagged": bool(flagged[fid - 1]),
            }
            for fid in range(1, N_COMPONENTS + 1)
        ]
        atomic_write_text(out, scale_table_to_json(table.values, table.provenance.value, comparison))
    except (ValueError, OSError) as exc:
        _fail(str(exc))
    for row in comparison:
        mark = "  DEVIATES >15%" if row["flagged"] else ""
        click.echo(
            f"F{row['function']:>2}  default {row['default']:5.1f}  "
            f"computed {row['computed']:5.1f}  dev {row['relative_deviation'] * 100:5.1f}%{mark}"
        )
    click.echo(f"{int(np.sum(~flagged))} of {N_COMPONENTS} functions within 15% of the defaults")


def _csv_text(header: str, rows) -> str:
    buf = io.StringIO()
    buf.write(header + "\n")
    for row in rows:
        buf.write(",".join(repr(v) if isinstance(v, float) else str(v) for v in row) + "\n")
    return buf.getvalue()


@main.command()
@click.option("--suite", "suite_file", required=True, type=click.Path(exists=True))
@click.option("--algo", type=click.Choice(sorted(_ALGORITHMS)), required=True)
@click.option("--budget-multiplier", type=int, default=2000, show_default=True)
@click.option("--runs", type=int, default=50, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--trace-dir", type=click.Path(file_okay=False), default=None,
              help="Also write one evaluation-by-evaluation CSV per run here.")
@click.option("--out", required=True, type=click.Path(), help="Output results CSV.")
def run(suite_file, algo, budget_multiplier, runs, seed, trace_dir, out):
    """Benchmark an optimizer on every problem of a suite."""
    try:
        suite = load_suite(suite_file)
        budget = default_budget(suite.dim, budget_multiplier)
        if trace_dir is not None:
            os.makedirs(trace_dir, exist_ok=True)
        rows = []
        for rec in suite.problems:
            problem = rec.to_problem(suite.dim)
            seeds = [
                int(s.generate_state(1)[0])
                for s in np.random.SeedSequence([seed, rec.problem_id]).spawn(runs)
            ]
            traces = run_optimizer_batch(_ALGORITHMS[algo], problem.evaluate, suite.dim, budget, seeds)
            for k, trace in enumerate(traces):
                rows.append((rec.problem_id, k, float(aocc(trace))))
                if trace_dir is not None:
                    path = os.path.join(trace_dir, f"problem{rec.problem_id}_run{k}.csv")
                    atomic_write_text(path, trace_csv_text(trace))
            rows.append((rec.problem_id, "mean", float(mean_aocc(traces))))
        atomic_write_text(out, _csv_text("problem_id,run,aocc", rows))
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        _fail(str(exc))
    click.echo(f"wrote {len(rows)} rows to {out}")


@main.command()
@click.option("--f1", type=int, required=True, help="First component function id.")
@click.option("--f2", type=int, required=True, help="Second component function id.")
@click.option("--alpha-steps", type=int, default=21, show_default=True)
@click.option("--dim", type=int, required=True)
@click.option("--runs", type=int, default=50, show_default=True)
@click.option("--instances", type=int, default=25, show_default=True)
@click.option("--budget-multiplier", type=int, default=2000, show_default=True)
@click.option("--algo", type=click.Choice(sorted(_ALGORITHMS)), required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", required=True, type=click.Path(), help="Output sweep CSV.")
def grid(f1, f2, alpha_steps, dim, runs, instances, budget_multiplier, algo, seed, out):
    """Sweep the mixing coefficient for one pairwise family and record
    mean AOCC per (alpha, instance)."""
    try:
        if alpha_steps < 2:
            raise ValueError(f"alpha-steps must be >= 2, got {alpha_steps}")
        alphas = np.linspace(0.0, 1.0, alpha_steps)
        budget = default_budget(dim, budget_multiplier)
        alphas, grid_vals = alpha_sweep(
            f1, f2, alphas, dim, runs, instances, budget, _ALGORITHMS[algo], seed
        )
        rows = [
            (float(alphas[i]), j + 1, float(grid_vals[i, j]))
            for i in range(len(alphas))
            for j in range(grid_vals.shape[1])
        ]
        atomic_write_text(out, _csv_text("alpha,instance,mean_aocc", rows))
    except (ValueError, OSError) as exc:
        _fail(str(exc))
    click.echo(f"wrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
