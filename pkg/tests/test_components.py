import numpy as np
import pytest

from bbobmix.components import (
    FUNCTION_NAMES,
    ComponentProblem,
    create_component,
    evaluate_raw,
    optimum_location,
)

ALL_FIDS = list(range(1, 25))


def test_function_names_cover_all_ids():
    assert sorted(FUNCTION_NAMES) == ALL_FIDS
    assert FUNCTION_NAMES[1] == "Sphere"
    assert FUNCTION_NAMES[24] == "Lunacek bi-Rastrigin"


@pytest.mark.parametrize("fid", ALL_FIDS)
@pytest.mark.parametrize("dim", [1, 2, 5, 10])
def test_optimum_value_is_zero(fid, dim):
    cp = create_component(fid, 1, dim)
    assert cp.evaluate_raw(cp.optimum_location) == 0.0


@pytest.mark.parametrize("fid", ALL_FIDS)
def test_optimum_beats_random_sampling(fid):
    for iid in range(1, 6):
        cp = create_component(fid, iid, 2)
        rng = np.random.default_rng(1000 + fid * 10 + iid)
        pts = rng.uniform(-5, 5, (10_000, 2))
        assert np.min(cp.evaluate_raw(pts)) >= cp.evaluate_raw(cp.optimum_location)


def test_optimum_beats_random_sampling_dim5():
    cp = create_component(8, 3, 5)
    rng = np.random.default_rng(83)
    pts = rng.uniform(-5, 5, (10_000, 5))
    assert np.min(cp.evaluate_raw(pts)) >= cp.evaluate_raw(cp.optimum_location)


@pytest.mark.parametrize("fid", ALL_FIDS)
def test_non_negative_everywhere(fid):
    cp = create_component(fid, 2, 3)
    rng = np.random.default_rng(fid)
    pts = rng.uniform(-20, 20, (2_000, 3))
    assert np.all(cp.evaluate_raw(pts) >= 0.0)


@pytest.mark.parametrize("fid", ALL_FIDS)
def test_determinism_bit_identical(fid):
    a = create_component(fid, 1, 2)
    b = create_component(fid, 1, 2)
    rng = np.random.default_rng(fid)
    pts = rng.uniform(-5, 5, (1_000, 2))
    assert np.array_equal(a.evaluate_raw(pts), b.evaluate_raw(pts))
    assert np.array_equal(a.optimum_location, b.optimum_location)


@pytest.mark.parametrize("fid", ALL_FIDS)
def test_instance_distinctness(fid):
    a = create_component(fid, 1, 3)
    b = create_component(fid, 2, 3)
    rng = np.random.default_rng(fid)
    pts = rng.uniform(-5, 5, (100, 3))
    assert np.any(a.evaluate_raw(pts) != b.evaluate_raw(pts))


@pytest.mark.parametrize("fid", ALL_FIDS)
def test_total_on_extreme_inputs(fid):
    cp = create_component(fid, 1, 3)
    extremes = np.array([
        [1e6, -1e6, 1e6],
        [1e150, 1e150, -1e150],
        [-1e300, 0.0, 1e300],
        [0.0, 0.0, 0.0],
    ])
    vals = cp.evaluate_raw(extremes)
    assert np.all(np.isfinite(vals))
    assert np.all(vals >= 0.0)


def test_sphere_unit_vector():
    cp = create_component(1, 1, 2)
    e1 = np.array([1.0, 0.0])
    assert cp.evaluate_raw(cp.optimum_location + e1) == pytest.approx(1.0, abs=1e-12)


def test_ellipsoid_even_symmetry():
    cp = create_component(2, 1, 3)
    e1 = np.array([1.0, 0.0, 0.0])
    plus = cp.evaluate_raw(cp.optimum_location + e1)
    minus = cp.evaluate_raw(cp.optimum_location - e1)
    assert plus == pytest.approx(minus, rel=1e-9)


def test_optimum_location_stable_and_copy_safe():
    cp = create_component(7, 4, 4)
    a = cp.optimum_location
    b = cp.optimum_location
    assert np.array_equal(a, b)
    with pytest.raises(ValueError):
        a[0] = 99.0


def test_optimum_inside_domain():
    for fid in ALL_FIDS:
        for iid in (1, 2, 3):
            cp = create_component(fid, iid, 5)
            assert np.all(np.abs(cp.optimum_location) <= 5.0)


def test_invalid_arguments_rejected():
    with pytest.raises(ValueError, match="fid"):
        create_component(0, 1, 2)
    with pytest.raises(ValueError, match="fid"):
        create_component(25, 1, 2)
    with pytest.raises(ValueError, match="iid"):
        create_component(1, 0, 2)
    with pytest.raises(ValueError, match="dim"):
        create_component(1, 1, 0)


def test_evaluation_input_validation():
    cp = create_component(1, 1, 3)
    with pytest.raises(ValueError, match="dimension"):
        cp.evaluate_raw(np.zeros(4))
    with pytest.raises(ValueError, match="finite"):
        cp.evaluate_raw(np.array([np.nan, 0.0, 0.0]))
    with pytest.raises(ValueError, match="finite"):
        cp.evaluate_raw(np.array([np.inf, 0.0, 0.0]))


def test_module_level_helpers():
    cp = create_component(3, 2, 4)
    x = np.ones(4)
    assert evaluate_raw(cp, x) == cp.evaluate_raw(x)
    assert np.array_equal(optimum_location(cp), cp.optimum_location)


def test_batch_matches_single_point():
    # BLAS picks different kernels for different row counts, so batch and
    # single-point evaluation agree to rounding, not bit-exactly
    cp = create_component(17, 1, 4)
    rng = np.random.default_rng(17)
    pts = rng.uniform(-5, 5, (50, 4))
    batch = cp.evaluate_raw(pts)
    singles = np.array([cp.evaluate_raw(p) for p in pts])
    assert np.allclose(batch, singles, rtol=1e-9, atol=1e-9)
