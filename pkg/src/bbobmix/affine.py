"""Affine combinations of component functions in log-precision space.

Two forms are provided: a pairwise combination blending two components
with a mixing coefficient alpha, and the many-component generator that
blends up to 24 rescaled components with a weight vector and places the
optimum anywhere in [-5, 5]^dim.
"""

from __future__ import annotations

import numpy as np

from .components import ComponentProblem, create_component

N_COMPONENTS = 24
#: floor applied to log10(precision); 10**LOG_FLOOR is the value at the optimum
LOG_FLOOR = -8.0
DOMAIN_LOW, DOMAIN_HIGH = -5.0, 5.0


def clamped_log_precision(precision) -> np.ndarray:
    """log10 of a non-negative precision, floored at -8 (0 maps to -8)."""
    p = np.asarray(precision, dtype=float)
    if np.any(p < 0):
        raise ValueError("precision must be non-negative")
    with np.errstate(divide="ignore"):
        return np.maximum(np.log10(np.maximum(p, 0.0)), LOG_FLOOR)


def rescale_component(precision, s: float):
    """Map a raw precision into roughly [0, 1]: (clamped log10 + 8) / s."""
    if s <= 0:
        raise ValueError(f"scale factor must be positive, got {s}")
    return (clamped_log_precision(precision) - LOG_FLOOR) / s


def inverse_rescale(y):
    """Undo the normalized log-precision scaling: 10**(10*y - 8)."""
    return 10.0 ** (10.0 * np.asarray(y, dtype=float) - 8.0)


def validate_weights(weights, min_positive: int = 2) -> np.ndarray:
    """Check the weight-vector invariants and return a float copy.

    Sampled weight vectors always have at least two positive entries;
    hand-built single-component problems may pass min_positive=1.
    """
    w = np.asarray(weights, dtype=float)
    if w.shape != (N_COMPONENTS,):
        raise ValueError(f"weights must have shape ({N_COMPONENTS},), got {w.shape}")
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    if abs(w.sum() - 1.0) > 1e-12:
        raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
    if np.count_nonzero(w) < min_positive:
        raise ValueError(
            f"at least {min_positive} weight(s) must be strictly positive"
        )
    return w.copy()


class ManyAffineProblem:
    """Weighted blend of up to 24 components with a movable optimum.

    Evaluation at x: inverse_rescale(sum_i w_i * rescale(raw_i(x - x_opt
    + o_i), s_i)), where raw_i is the precision of component i and o_i its
    own optimum. The value at x_opt is exactly 1e-8 and no point evaluates
    below it. Components with zero weight are never instantiated.

    Immutable after construction; evaluation is pure and thread-safe.
    """

    def __init__(self, weights, instances, x_opt, dim: int, scale_factors):
        self.weights = validate_weights(weights, min_positive=1)
        instances = np.asarray(instances)
        if instances.shape != (N_COMPONENTS,):
            raise ValueError(f"instances must have shape ({N_COMPONENTS},)")
        if np.any(instances < 1):
            raise ValueError("instance ids must be >= 1")
        self.instances = instances.astype(int)
        self.dim = int(dim)
        x_opt = np.asarray(x_opt, dtype=float)
        if x_opt.shape != (self.dim,):
            raise ValueError(f"x_opt must have shape ({self.dim},), got {x_opt.shape}")
        if np.any(x_opt < DOMAIN_LOW) or np.any(x_opt > DOMAIN_HIGH):
            raise ValueError("x_opt must lie in [-5, 5]^dim")
        self.x_opt = x_opt.copy()
        self.x_opt.setflags(write=False)
        scale_factors = np.asarray(scale_factors, dtype=float)
        if scale_factors.shape != (N_COMPONENTS,):
            raise ValueError(f"scale_factors must have shape ({N_COMPONENTS},)")
        if np.any(scale_factors <= 0):
            raise ValueError("scale factors must be positive")
        self.scale_factors = scale_factors.copy()
        self._active = [
            (
                float(self.weights[i]),
                float(self.scale_factors[i]),
                create_component(i + 1, int(self.instances[i]), self.dim),
            )
            for i in np.flatnonzero(self.weights)
        ]

    @property
    def components(self) -> list[ComponentProblem]:
        """The instantiated (positively weighted) components."""
        return [cp for _, _, cp in self._active]

    def evaluate(self, x) -> float | np.ndarray:
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        pts = np.atleast_2d(x)
        if pts.shape[-1] != self.dim:
            raise ValueError(
                f"point has dimension {pts.shape[-1]}, problem has dimension {self.dim}"
            )
        acc = np.zeros(pts.shape[0])
        # canonical accumulation order: the sum is mathematically
        # permutation-invariant, and iterating by function id makes it
        # bit-exact regardless of how the components are stored
        for w, s, cp in sorted(self._active, key=lambda entry: entry[2].fid):
            shifted = pts - self.x_opt + cp.optimum_location
            acc += w * rescale_component(cp.evaluate_raw(shifted), s)
        vals = inverse_rescale(acc)
        return float(vals[0]) if single else vals

    __call__ = evaluate


def make_many_affine(weights, instances, x_opt, dim, scale_factors) -> ManyAffineProblem:
    return ManyAffineProblem(weights, instances, x_opt, dim, scale_factors)


class PairwiseProblem:
    """Geometric log-mean of two components' precisions.

    The second component is shifted so both optima coincide; by default
    the combined optimum sits at the first component's optimum, or at
    `x_opt` when one is supplied. Both log arguments are floored at -8,
    so the value at the optimum is exactly 1e-8.
    """

    def __init__(self, f1: int, i1: int, f2: int, i2: int, alpha: float, dim: int, x_opt=None):
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {alpha}")
        self.alpha = float(alpha)
        self.dim = int(dim)
        self.first = create_component(f1, i1, dim)
        self.second = create_component(f2, i2, dim)
        if x_opt is None:
            self.x_opt = self.first.optimum_location.copy()
        else:
            self.x_opt = np.asarray(x_opt, dtype=float).copy()
            if self.x_opt.shape != (self.dim,):
                raise ValueError(f"x_opt must have shape ({self.dim},)")
        self.x_opt.setflags(write=False)

    def evaluate(self, x) -> float | np.ndarray:
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        pts = np.atleast_2d(x)
        if pts.shape[-1] != self.dim:
            raise ValueError(
                f"point has dimension {pts.shape[-1]}, problem has dimension {self.dim}"
            )
        shift1 = pts - self.x_opt + self.first.optimum_location
        shift2 = pts - self.x_opt + self.second.optimum_location
        # at the endpoints, return the clamped single-component precision
        # directly so the 10**log10 round-trip cannot perturb it
        if self.alpha == 1.0:
            vals = np.maximum(self.first.evaluate_raw(shift1), 10.0**LOG_FLOOR)
        elif self.alpha == 0.0:
            vals = np.maximum(self.second.evaluate_raw(shift2), 10.0**LOG_FLOOR)
        else:
            log1 = clamped_log_precision(self.first.evaluate_raw(shift1))
            log2 = clamped_log_precision(self.second.evaluate_raw(shift2))
            vals = 10.0 ** (self.alpha * log1 + (1.0 - self.alpha) * log2)
        return float(vals[0]) if single else vals

    __call__ = evaluate


def combine_pairwise(f1, i1, f2, i2, alpha, dim, x_opt=None) -> PairwiseProblem:
    return PairwiseProblem(f1, i1, f2, i2, alpha, dim, x_opt=x_opt)


def sample_weights(rng: np.random.Generator, threshold: float = 0.85) -> np.ndarray:
    """Draw a sparse normalized weight vector.

    Uniform weights are thresholded at min(threshold, third-highest) and
    the survivors renormalized; at least two entries stay positive even
    under ties.
    """
    if not 0.0 <= threshold < 1.0:
        raise ValueError(f"threshold must be in [0, 1), got {threshold}")
    raw = rng.random(N_COMPONENTS)
    cut = min(threshold, float(np.sort(raw)[::-1][2]))
    w = np.maximum(raw - cut, 0.0)
    if np.count_nonzero(w) < 2:
        # ties at the cut: lower it to the largest value keeping >= 2 positive
        for v in np.unique(raw)[::-1]:
            if np.count_nonzero(raw > v) >= 2:
                w = np.maximum(raw - v, 0.0)
                break
        else:
            # fully degenerate draw (all entries equal)
            w = np.zeros(N_COMPONENTS)
            w[:2] = 0.5
            return w
    return w / w.sum()


def sample_instance(
    rng: np.random.Generator,
    dim: int,
    threshold: float = 0.85,
    instance_range: int = 100,
):
    """Draw (weights, instances, x_opt) for one random generated problem."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    weights = sample_weights(rng, threshold)
    instances = rng.integers(1, instance_range + 1, N_COMPONENTS)
    x_opt = rng.uniform(DOMAIN_LOW, DOMAIN_HIGH, dim)
    return weights, instances, x_opt
