"""Anytime-performance measurement and baseline optimizers.

Performance is summarized by the area over the convergence curve (AOCC):
log-scaled best-so-far values clamped to [1e-8, 1e2], averaged over the
evaluation budget, mapped so 1.0 means the floor was hit immediately and
0.0 means no sampled point ever beat 1e2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .affine import DOMAIN_HIGH, DOMAIN_LOW
from .affine import PairwiseProblem

#: AOCC value clamp bounds, in log10 space
AOCC_LOG_LOW = -8.0
AOCC_LOG_HIGH = 2.0

#: default budget is this many evaluations per dimension
DEFAULT_BUDGET_MULTIPLIER = 2000


class Algorithm(enum.Enum):
    RANDOM_SEARCH = "random-search"
    ONE_PLUS_ONE_ES = "one-plus-one-es"
    BASIC_DE = "basic-de"


@dataclass(frozen=True)
class RunTrace:
    """Best-so-far objective sequence of a single optimizer run."""

    best_so_far: np.ndarray
    raw: np.ndarray
    problem_id: str = ""
    seed: int = 0

    def __post_init__(self):
        best = np.asarray(self.best_so_far, dtype=float)
        raw = np.asarray(self.raw, dtype=float)
        if best.size == 0:
            raise ValueError("trace must contain at least one evaluation")
        if best.shape != raw.shape:
            raise ValueError("best_so_far and raw must have equal length")
        if np.any(np.diff(best) > 0):
            raise ValueError("best_so_far must be non-increasing")
        best = best.copy()
        raw = raw.copy()
        best.setflags(write=False)
        raw.setflags(write=False)
        object.__setattr__(self, "best_so_far", best)
        object.__setattr__(self, "raw", raw)

    @property
    def budget(self) -> int:
        return int(self.best_so_far.size)


def default_budget(dim: int, multiplier: int = DEFAULT_BUDGET_MULTIPLIER) -> int:
    if dim < 1 or multiplier < 1:
        raise ValueError("dim and multiplier must be >= 1")
    return multiplier * dim


def aocc(trace) -> float:
    """Area over the convergence curve: mean over the trace of
    1 - (clamp(log10(y), -8, 2) + 8) / 10. Higher is better."""
    y = trace.best_so_far if isinstance(trace, RunTrace) else np.asarray(trace, dtype=float)
    if y.size == 0:
        raise ValueError("trace must contain at least one evaluation")
    if np.any(y <= 0):
        raise ValueError("trace values must be positive")
    logs = np.clip(np.log10(y), AOCC_LOG_LOW, AOCC_LOG_HIGH)
    return float(np.mean(1.0 - (logs + 8.0) / 10.0))


def mean_aocc(traces) -> float:
    """Average AOCC over runs of equal budget."""
    traces = list(traces)
    if not traces:
        raise ValueError("need at least one trace")
    budgets = {t.budget if isinstance(t, RunTrace) else len(t) for t in traces}
    if len(budgets) != 1:
        raise ValueError(f"traces have mixed budgets: {sorted(budgets)}")
    return float(np.mean([aocc(t) for t in traces]))


def trace_csv_text(trace: RunTrace) -> str:
    """Per-run log: one row per evaluation, repr-shortest decimals."""
    lines = ["evaluation,raw_y,best_so_far"]
    for i in range(trace.budget):
        lines.append(f"{i + 1},{float(trace.raw[i])!r},{float(trace.best_so_far[i])!r}")
    return "\n".join(lines) + "\n"


def _clamp_box(x: np.ndarray) -> np.ndarray:
    return np.clip(x, DOMAIN_LOW, DOMAIN_HIGH)


def _trace_from_raw(raw: np.ndarray, problem_id: str, seed: int) -> RunTrace:
    return RunTrace(np.minimum.accumulate(raw), raw, problem_id, seed)


def _run_random_search(problem, dim, budget, rng):
    pts = rng.uniform(DOMAIN_LOW, DOMAIN_HIGH, (budget, dim))
    return np.asarray(problem(pts), dtype=float)


# (1+1)-ES step-size control: one-fifth success rule over a sliding window
ES_SIGMA0 = 2.0
ES_ADAPT_FACTOR = 1.5
ES_WINDOW = 10


def _run_one_plus_one_es(problem, dim, budget, rng):
    x = rng.uniform(DOMAIN_LOW, DOMAIN_HIGH, dim)
    raw = np.empty(budget)
    raw[0] = problem(x)
    best = raw[0]
    sigma = ES_SIGMA0
    # pre-drawn mutations keep this path bit-identical to the batch kernel
    normals = rng.standard_normal((budget - 1, dim)) if budget > 1 else None
    successes = []
    for i in range(1, budget):
        cand = _clamp_box(x + sigma * normals[i - 1])
        y = problem(cand)
        raw[i] = y
        ok = y < best
        if ok:
            x, best = cand, y
        successes.append(ok)
        if len(successes) == ES_WINDOW:
            rate = sum(successes) / ES_WINDOW
            sigma = sigma * ES_ADAPT_FACTOR if rate > 0.2 else sigma / ES_ADAPT_FACTOR
            successes = []
    return raw


def _run_one_plus_one_es_batch(problem, dim, budget, rngs):
    """Run the (1+1)-ES for several seeds at once, one problem evaluation
    call per generation. Bit-identical to looping _run_one_plus_one_es."""
    n = len(rngs)
    xs = np.stack([rng.uniform(DOMAIN_LOW, DOMAIN_HIGH, dim) for rng in rngs])
    raw = np.empty((n, budget))
    raw[:, 0] = problem(xs)
    best = raw[:, 0].copy()
    if budget > 1:
        normals = np.stack([rng.standard_normal((budget - 1, dim)) for rng in rngs])
    sigma = np.full(n, ES_SIGMA0)
    succ = np.zeros((n, ES_WINDOW), dtype=bool)
    nsucc = 0
    for i in range(1, budget):
        cand = _clamp_box(xs + sigma[:, None] * normals[:, i - 1, :])
        y = np.asarray(problem(cand), dtype=float)
        raw[:, i] = y
        ok = y < best
        xs[ok] = cand[ok]
        best[ok] = y[ok]
        succ[:, nsucc] = ok
        nsucc += 1
        if nsucc == ES_WINDOW:
            rate = succ.sum(axis=1) / ES_WINDOW
            sigma = np.where(rate > 0.2, sigma * ES_ADAPT_FACTOR, sigma / ES_ADAPT_FACTOR)
            nsucc = 0
    return raw


# basic differential evolution: rand/1/bin
DE_F = 0.5
DE_CR = 0.9
DE_POP_MULTIPLIER = 10


def _run_basic_de(problem, dim, budget, rng):
    pop_size = min(DE_POP_MULTIPLIER * dim, budget)
    pop = rng.uniform(DOMAIN_LOW, DOMAIN_HIGH, (pop_size, dim))
    raw = np.empty(budget)
    fit = np.asarray(problem(pop), dtype=float)
    raw[:pop_size] = fit
    used = pop_size
    while used < budget:
        for i in range(pop_size):
            if used >= budget:
                break
            idx = rng.choice(pop_size - 1, 3, replace=False)
            idx[idx >= i] += 1
            a, b, c = pop[idx]
            mutant = _clamp_box(a + DE_F * (b - c))
            cross = rng.random(dim) < DE_CR
            cross[rng.integers(dim)] = True
            trial = np.where(cross, mutant, pop[i])
            y = float(np.atleast_1d(problem(trial))[0])
            raw[used] = y
            used += 1
            if y <= fit[i]:
                pop[i], fit[i] = trial, y
    return raw


_RUNNERS = {
    Algorithm.RANDOM_SEARCH: _run_random_search,
    Algorithm.ONE_PLUS_ONE_ES: _run_one_plus_one_es,
    Algorithm.BASIC_DE: _run_basic_de,
}


def run_optimizer(algo, problem, dim: int, budget: int, seed: int, problem_id: str = "") -> RunTrace:
    """One optimizer run: exactly `budget` evaluations, points clamped to
    the box, deterministic per seed."""
    algo = Algorithm(algo) if not isinstance(algo, Algorithm) else algo
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    rng = np.random.default_rng(seed)
    raw = _RUNNERS[algo](problem, dim, budget, rng)
    return _trace_from_raw(raw, problem_id, seed)


def run_optimizer_batch(algo, problem, dim: int, budget: int, seeds) -> list[RunTrace]:
    """Several runs on one problem; the ES path is vectorized across runs."""
    algo = Algorithm(algo) if not isinstance(algo, Algorithm) else algo
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    seeds = list(seeds)
    if algo is Algorithm.ONE_PLUS_ONE_ES and len(seeds) > 1:
        rngs = [np.random.default_rng(s) for s in seeds]
        raws = _run_one_plus_one_es_batch(problem, dim, budget, rngs)
        return [_trace_from_raw(raws[k], "", seeds[k]) for k in range(len(seeds))]
    return [run_optimizer(algo, problem, dim, budget, s) for s in seeds]


def alpha_sweep(
    f1: int,
    f2: int,
    alphas,
    dim: int,
    runs: int,
    instances: int,
    budget: int,
    algo,
    seed: int = 0,
):
    """Mean AOCC per (alpha, instance) for the pairwise family (f1, f2).

    The second component always uses instance 1; instance k of the family
    uses the first component's instance k with a per-instance uniform
    optimum location. Seeds depend only on (instance, run), never on
    alpha, so the alpha = 0 and alpha = 1 columns coincide with runs on
    the pure components.
    """
    alphas = [float(a) for a in alphas]
    if any(not 0.0 <= a <= 1.0 for a in alphas):
        raise ValueError("alphas must lie in [0, 1]")
    if runs < 1 or instances < 1:
        raise ValueError("runs and instances must be >= 1")
    grid = np.empty((len(alphas), instances))
    for j in range(instances):
        iid = j + 1
        ss = np.random.SeedSequence([seed, iid])
        x_opt = np.random.default_rng(ss).uniform(DOMAIN_LOW, DOMAIN_HIGH, dim)
        run_seeds = [int(s.generate_state(1)[0]) for s in ss.spawn(runs)]
        for i, a in enumerate(alphas):
            prob = PairwiseProblem(f1, iid, f2, 1, a, dim, x_opt=x_opt)
            traces = run_optimizer_batch(algo, prob.evaluate, dim, budget, run_seeds)
            grid[i, j] = mean_aocc(traces)
    return np.asarray(alphas), grid
