import numpy as np
import pytest

from bbobmix.calibration import (
    Aggregator,
    DEFAULT_SCALE_FACTORS,
    Provenance,
    ScaleTable,
    aggregate_log_precision,
    compare_to_default,
    compute_scale_factor,
    compute_scale_table,
    default_scale_table,
    equal_scale_table,
)


def test_default_table_values():
    table = default_scale_table()
    assert table.provenance is Provenance.DEFAULT
    assert table.values[0] == 11.0
    assert table.values[23] == 12.1
    assert table.values.shape == (24,)
    assert np.all(table.values > 0)


def test_equal_table():
    table = equal_scale_table()
    assert np.all(table.values == 10.0)


def test_scale_table_validation():
    with pytest.raises(ValueError):
        ScaleTable(np.ones(23))
    with pytest.raises(ValueError):
        ScaleTable(np.zeros(24))
    table = ScaleTable(np.ones(24))
    with pytest.raises(ValueError):
        table.values[0] = 5.0


def test_aggregate_constant_precision():
    # precision constant 1 everywhere: min = max = log10(1) + 8 = 8
    ones = np.ones(100)
    assert aggregate_log_precision(ones, Aggregator.MID_RANGE) == 8.0
    assert aggregate_log_precision(ones, Aggregator.MIN) == 8.0
    assert aggregate_log_precision(ones, Aggregator.MAX) == 8.0
    assert aggregate_log_precision(ones, Aggregator.MEAN) == 8.0


def test_aggregate_zero_floor():
    zeros = np.zeros(10)
    assert aggregate_log_precision(zeros, Aggregator.MIN) == 0.0
    assert aggregate_log_precision(zeros, Aggregator.MID_RANGE) == 0.0


def test_aggregator_ordering():
    rng = np.random.default_rng(0)
    for fid in (1, 8, 21):
        p = None
        vals = {}
        for agg in (Aggregator.MIN, Aggregator.MID_RANGE, Aggregator.MAX):
            r = np.random.default_rng(fid)
            vals[agg] = compute_scale_factor(fid, 1, 5, 2_000, r, agg)
        assert vals[Aggregator.MIN] <= vals[Aggregator.MID_RANGE] <= vals[Aggregator.MAX]


def test_compute_scale_factor_range():
    rng = np.random.default_rng(3)
    v = compute_scale_factor(5, 1, 3, 1_000, rng, Aggregator.MIN)
    assert 0.0 <= v


def test_compute_scale_factor_rejects_equal():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        compute_scale_factor(1, 1, 2, 100, rng, Aggregator.EQUAL)
    with pytest.raises(ValueError):
        compute_scale_factor(1, 1, 2, 0, rng, Aggregator.MIN)


def test_sphere_factor_near_default():
    rng = np.random.default_rng(42)
    v = compute_scale_factor(1, 1, 5, 50_000, rng, Aggregator.MID_RANGE)
    assert 11.0 * 0.85 <= v <= 11.0 * 1.15


def test_compute_scale_table_equal_shortcut():
    table = compute_scale_table([2, 3], 100, 0, Aggregator.EQUAL)
    assert np.all(table.values == 10.0)


def test_compute_scale_table_single_dim_median_identity():
    rng_factor = compute_scale_factor(
        1, 1, 5, 1_000, np.random.default_rng(np.random.SeedSequence([9, 1, 5])), Aggregator.MID_RANGE
    )
    table = compute_scale_table([5], 1_000, 9, Aggregator.MID_RANGE)
    assert table.values[0] == pytest.approx(round(rng_factor, 1), abs=0.051)


def test_compute_scale_table_reproducible():
    a = compute_scale_table([2, 3], 2_000, 7, Aggregator.MID_RANGE)
    b = compute_scale_table([2, 3], 2_000, 7, Aggregator.MID_RANGE)
    assert np.array_equal(a.values, b.values)
    assert a.provenance is Provenance.RECALIBRATED


def test_compute_scale_table_rejects_empty_dims():
    with pytest.raises(ValueError):
        compute_scale_table([], 100, 0, Aggregator.MID_RANGE)


def test_dimension_stability():
    # factors stay within 25% of each other across mid-size dimensions
    for fid in (1, 2, 14):
        per_dim = []
        for dim in (5, 10, 20):
            rng = np.random.default_rng(np.random.SeedSequence([4, fid, dim]))
            per_dim.append(compute_scale_factor(fid, 1, dim, 10_000, rng, Aggregator.MID_RANGE))
        lo, hi = min(per_dim), max(per_dim)
        assert hi <= lo * 1.25


def test_compare_to_default_shapes():
    dev, flagged = compare_to_default(default_scale_table())
    assert dev.shape == (24,)
    assert not np.any(flagged)
    assert np.all(dev == 0.0)
