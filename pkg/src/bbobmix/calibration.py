"""Per-function scale factors from random sampling.

A component's scale factor normalizes its clamped log-precision into
roughly [0, 1] before blending. The built-in defaults below were
published alongside the generator; `compute_scale_table` re-derives a
table from scratch by aggregating sampled log-precisions per dimension
and taking a rounded median across dimensions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .affine import DOMAIN_HIGH, DOMAIN_LOW, LOG_FLOOR, N_COMPONENTS
from .components import create_component

#: published per-function scale factors, index i -> function id i+1
DEFAULT_SCALE_FACTORS = np.array([
    11.0, 17.5, 12.3, 12.6, 11.5, 15.3, 12.1, 15.3, 15.2, 17.4, 13.4, 20.4,
    12.9, 10.4, 12.3, 10.3, 9.8, 10.6, 10.0, 14.7, 10.7, 10.8, 9.0, 12.1,
])
DEFAULT_SCALE_FACTORS.setflags(write=False)

DEFAULT_CALIBRATION_DIMS = (2, 3, 5, 10, 20, 40)


class Aggregator(enum.Enum):
    MIN = "min"
    MEAN = "mean"
    MAX = "max"
    MID_RANGE = "mid-range"
    EQUAL = "equal"


class Provenance(enum.Enum):
    DEFAULT = "default"
    RECALIBRATED = "recalibrated"


@dataclass(frozen=True)
class ScaleTable:
    """24 positive per-function scale factors plus their origin."""

    values: np.ndarray
    provenance: Provenance = Provenance.RECALIBRATED

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (N_COMPONENTS,):
            raise ValueError(f"scale table needs {N_COMPONENTS} entries, got {values.shape}")
        if np.any(values <= 0):
            raise ValueError("scale factors must be positive")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)


def default_scale_table() -> ScaleTable:
    return ScaleTable(DEFAULT_SCALE_FACTORS, Provenance.DEFAULT)


def equal_scale_table() -> ScaleTable:
    """The uncalibrated table: every factor 10, making the rescaling
    round-trip the identity."""
    return ScaleTable(np.full(N_COMPONENTS, 10.0), Provenance.RECALIBRATED)


def aggregate_log_precision(precisions: np.ndarray, agg: Aggregator) -> float:
    """Aggregate raw precisions, then report as clamped log10 + 8.

    Aggregation happens in raw value space before the log transform, so
    MID_RANGE tracks the dominant (largest) values; the result sits in
    [0, inf) with a zero-precision aggregate mapping to 0.
    """
    p = np.asarray(precisions, dtype=float)
    if agg is Aggregator.MIN:
        agg_val = p.min()
    elif agg is Aggregator.MEAN:
        agg_val = p.mean()
    elif agg is Aggregator.MAX:
        agg_val = p.max()
    elif agg is Aggregator.MID_RANGE:
        agg_val = (p.max() + p.min()) / 2.0
    else:
        raise ValueError(f"unsupported aggregator {agg}")
    with np.errstate(divide="ignore"):
        return float(np.maximum(np.log10(max(float(agg_val), 0.0)), LOG_FLOOR) - LOG_FLOOR)


def compute_scale_factor(
    fid: int,
    iid: int,
    dim: int,
    n_samples: int,
    rng: np.random.Generator,
    agg: Aggregator,
) -> float:
    """Sample the component uniformly in the domain and aggregate its
    clamped log-precision."""
    if agg is Aggregator.EQUAL:
        raise ValueError("EQUAL bypasses per-function calibration; use compute_scale_table")
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")
    cp = create_component(fid, iid, dim)
    pts = rng.uniform(DOMAIN_LOW, DOMAIN_HIGH, (n_samples, dim))
    return aggregate_log_precision(cp.evaluate_raw(pts), agg)


def _round_half_up(x: float, decimals: int = 1) -> float:
    f = 10.0**decimals
    return math.floor(x * f + 0.5) / f


def compute_scale_table(
    dims,
    n_samples: int,
    seed: int,
    agg: Aggregator,
    iid: int = 1,
) -> ScaleTable:
    """Median-across-dimensions scale table, rounded to one decimal.

    Each (function, dimension) pair draws from its own seeded substream,
    so per-function computations are order-independent and could run in
    parallel.
    """
    if agg is Aggregator.EQUAL:
        return equal_scale_table()
    dims = list(dims)
    if not dims:
        raise ValueError("dims must be non-empty")
    values = np.empty(N_COMPONENTS)
    for fid in range(1, N_COMPONENTS + 1):
        per_dim = []
        for dim in dims:
            rng = np.random.default_rng(np.random.SeedSequence([seed, fid, dim]))
            per_dim.append(compute_scale_factor(fid, iid, dim, n_samples, rng, agg))
        values[fid - 1] = _round_half_up(float(np.median(per_dim)))
    return ScaleTable(values, Provenance.RECALIBRATED)


def compare_to_default(table: ScaleTable, tolerance: float = 0.15):
    """Relative deviation of each entry from the built-in defaults.

    Returns (deviations, flagged) where flagged marks entries whose
    relative deviation exceeds the tolerance.
    """
    dev = np.abs(table.values - DEFAULT_SCALE_FACTORS) / DEFAULT_SCALE_FACTORS
    return dev, dev > tolerance
