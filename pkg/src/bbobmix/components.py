"""The 24 noiseless BBOB component functions with seeded instance transforms.

Each (function id, instance id, dimension) triple deterministically fixes
all transformation parameters (shift vectors, rotation matrices, sign
patterns). The instance parameters are drawn from a counter-based PRNG
seeded by the triple, so independently constructed problems with equal
identifiers are bit-identical. Bit-compatibility with the legacy COCO
generator is deliberately not provided; the structural properties of the
original suite (optimum placement, orthogonal rotations, conditioning)
are.

The raw value returned by ``evaluate_raw`` is the precision f(x) - f(opt):
it is exactly 0 at the exposed optimum and non-negative everywhere,
including far outside [-5, 5]^dim.
"""

from __future__ import annotations

import numpy as np

from .transforms import (
    asymmetrize,
    boundary_penalty,
    oscillate,
    random_rotation,
)

FUNCTION_NAMES = {
    1: "Sphere",
    2: "Ellipsoidal separable",
    3: "Rastrigin separable",
    4: "Bueche-Rastrigin",
    5: "Linear Slope",
    6: "Attractive Sector",
    7: "Step Ellipsoidal",
    8: "Rosenbrock",
    9: "Rosenbrock rotated",
    10: "Ellipsoidal",
    11: "Discus",
    12: "Bent Cigar",
    13: "Sharp Ridge",
    14: "Different Powers",
    15: "Rastrigin",
    16: "Weierstrass",
    17: "Schaffers F7",
    18: "Schaffers F7 ill-conditioned",
    19: "Griewank-Rosenbrock",
    20: "Schwefel",
    21: "Gallagher 101 peaks",
    22: "Gallagher 21 peaks",
    23: "Katsuura",
    24: "Lunacek bi-Rastrigin",
}

_SCHWEFEL_X = 4.2096874633
_SCHWEFEL_F = 418.9828872724339


def _diag_powers(condition: float, dim: int) -> np.ndarray:
    return condition ** np.linspace(0.0, 1.0, dim)


def _uniform_xopt(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.uniform(-4.0, 4.0, dim)


def _signs(rng: np.random.Generator, dim: int) -> np.ndarray:
    s = np.sign(rng.uniform(-1.0, 1.0, dim))
    s[s == 0.0] = 1.0
    return s


def _pairs_sum(term: np.ndarray) -> np.ndarray:
    # term has shape (n, max(dim - 1, 1)); degenerate dim-1 handled by caller
    return np.sum(term, axis=-1)


class ComponentProblem:
    """One instantiated component function with a queryable exact optimum.

    Immutable after construction; evaluation is pure and may be called
    concurrently. Accepts a single point of shape (dim,) or a batch of
    shape (n, dim).
    """

    def __init__(self, fid: int, iid: int, dim: int):
        if not isinstance(fid, (int, np.integer)) or not 1 <= fid <= 24:
            raise ValueError(f"fid must be an integer in [1, 24], got {fid!r}")
        if not isinstance(iid, (int, np.integer)) or iid < 1:
            raise ValueError(f"iid must be a positive integer, got {iid!r}")
        if not isinstance(dim, (int, np.integer)) or dim < 1:
            raise ValueError(f"dim must be an integer >= 1, got {dim!r}")
        self.fid = int(fid)
        self.iid = int(iid)
        self.dim = int(dim)
        rng = np.random.default_rng(np.random.SeedSequence([self.fid, self.iid, self.dim]))
        init = getattr(self, f"_init_f{self.fid}")
        self._params = init(rng, self.dim)
        self.optimum_location = self._params["xopt"]
        self.optimum_location.setflags(write=False)
        core = getattr(self, f"_core_f{self.fid}")
        self._core = core
        # f(opt) subtracted at evaluation so the exposed optimum is exact 0
        self._ref = float(core(self.optimum_location[None, :])[0])

    @property
    def name(self) -> str:
        return FUNCTION_NAMES[self.fid]

    def __repr__(self) -> str:
        return f"ComponentProblem(fid={self.fid}, iid={self.iid}, dim={self.dim})"

    def evaluate_raw(self, x) -> float | np.ndarray:
        """Precision f(x) - f(opt); >= 0, exactly 0 at the optimum."""
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        pts = np.atleast_2d(x)
        if pts.shape[-1] != self.dim:
            raise ValueError(
                f"point has dimension {pts.shape[-1]}, problem has dimension {self.dim}"
            )
        if not np.all(np.isfinite(pts)):
            raise ValueError("input contains non-finite coordinates")
        with np.errstate(over="ignore", invalid="ignore"):
            core = self._core(pts)
        # overflow far outside the box saturates instead of propagating
        core = np.nan_to_num(core, nan=1e300, posinf=1e300)
        vals = np.maximum(core - self._ref, 0.0)
        return float(vals[0]) if single else vals

    # --- per-function instance parameters and core evaluations -----------

    def _init_f1(self, rng, dim):
        return {"xopt": _uniform_xopt(rng, dim)}

    def _core_f1(self, pts):
        z = pts - self._params["xopt"]
        return np.sum(z**2, axis=-1)

    def _init_f2(self, rng, dim):
        return {"xopt": _uniform_xopt(rng, dim), "scales": _diag_powers(1e6, dim)}

    def _core_f2(self, pts):
        p = self._params
        z = oscillate(pts - p["xopt"])
        return np.sum(p["scales"] * z**2, axis=-1)

    def _init_f3(self, rng, dim):
        return {"xopt": _uniform_xopt(rng, dim), "scales": _diag_powers(10.0**0.5, dim)}

    def _core_f3(self, pts):
        p = self._params
        z = asymmetrize(oscillate(pts - p["xopt"]), 0.2) * p["scales"]
        return 10.0 * (self.dim - np.sum(np.cos(2 * np.pi * z), axis=-1)) + np.sum(z**2, axis=-1)

    def _init_f4(self, rng, dim):
        xopt = _uniform_xopt(rng, dim)
        xopt[::2] = np.abs(xopt[::2])
        return {"xopt": xopt, "scales": _diag_powers(10.0**0.5, dim)}

    def _core_f4(self, pts):
        p = self._params
        z = oscillate(pts - p["xopt"])
        even = z[:, ::2]
        z[:, ::2] = np.where(even > 0.0, 10.0 * even, even)
        z = z * p["scales"]
        rast = 10.0 * (self.dim - np.sum(np.cos(2 * np.pi * z), axis=-1)) + np.sum(z**2, axis=-1)
        return rast + 100.0 * boundary_penalty(pts, 1.0)

    def _init_f5(self, rng, dim):
        xopt = 5.0 * _signs(rng, dim)
        slopes = -np.sign(xopt) * _diag_powers(10.0, dim)
        return {"xopt": xopt, "slopes": slopes}

    def _core_f5(self, pts):
        p = self._params
        # coordinates past the optimal face are clamped back onto it
        x = pts.copy()
        beyond = x * p["xopt"] > 25.0
        x[beyond] = np.sign(x[beyond]) * 5.0
        return x @ p["slopes"] + 5.0 * np.sum(np.abs(p["slopes"]))

    def _init_f6(self, rng, dim):
        xopt = _uniform_xopt(rng, dim)
        m = random_rotation(rng, dim) @ np.diag(_diag_powers(10.0**0.5, dim)) @ random_rotation(rng, dim)
        return {"xopt": xopt, "m": m}

    def _core_f6(self, pts):
        p = self._params
        z = (pts - p["xopt"]) @ p["m"].T
        z = np.where(z * p["xopt"] > 0.0, 100.0 * z, z)
        return oscillate(np.sum(z**2, axis=-1)) ** 0.9

    def _init_f7(self, rng, dim):
        return {
            "xopt": _uniform_xopt(rng, dim),
            "m": random_rotation(rng, dim) @ np.diag(_diag_powers(10.0**0.5, dim)),
            "q": random_rotation(rng, dim),
            "scales": _diag_powers(100.0, dim),
        }

    def _core_f7(self, pts):
        p = self._params
        zhat = (pts - p["xopt"]) @ p["m"].T
        z1 = np.abs(zhat[:, 0])
        ztilde = np.where(np.abs(zhat) > 0.5, np.round(zhat), np.round(10.0 * zhat) / 10.0)
        z = ztilde @ p["q"].T
        core = 0.1 * np.maximum(1e-4 * z1, np.sum(p["scales"] * z**2, axis=-1))
        return core + boundary_penalty(pts, 1.0)

    def _init_f8(self, rng, dim):
        return {"xopt": 0.75 * _uniform_xopt(rng, dim), "c": max(1.0, dim**0.5 / 8.0)}

    def _rosenbrock(self, z):
        if self.dim == 1:
            return (z[:, 0] - 1.0) ** 2
        return _pairs_sum(100.0 * (z[:, :-1] ** 2 - z[:, 1:]) ** 2 + (z[:, :-1] - 1.0) ** 2)

    def _core_f8(self, pts):
        p = self._params
        z = p["c"] * (pts - p["xopt"]) + 1.0
        return self._rosenbrock(z)

    def _init_f9(self, rng, dim):
        c = max(1.0, dim**0.5 / 8.0)
        m = c * random_rotation(rng, dim)
        # xopt solves M xopt = 0.5 * ones, so z(xopt) = 1 exactly
        xopt = (m.T @ (0.5 * np.ones(dim))) / c**2
        return {"xopt": xopt, "m": m}

    def _core_f9(self, pts):
        p = self._params
        z = (pts - p["xopt"]) @ p["m"].T + 1.0
        return self._rosenbrock(z)

    def _init_f10(self, rng, dim):
        return {
            "xopt": _uniform_xopt(rng, dim),
            "r": random_rotation(rng, dim),
            "scales": _diag_powers(1e6, dim),
        }

    def _core_f10(self, pts):
        p = self._params
        z = oscillate((pts - p["xopt"]) @ p["r"].T)
        return np.sum(p["scales"] * z**2, axis=-1)

    def _init_f11(self, rng, dim):
        return {"xopt": _uniform_xopt(rng, dim), "r": random_rotation(rng, dim)}

    def _core_f11(self, pts):
        p = self._params
        z = oscillate((pts - p["xopt"]) @ p["r"].T)
        return 1e6 * z[:, 0] ** 2 + np.sum(z[:, 1:] ** 2, axis=-1)

    def _init_f12(self, rng, dim):
        return {"xopt": _uniform_xopt(rng, dim), "r": random_rotation(rng, dim)}

    def _core_f12(self, pts):
        p = self._params
        z = asymmetrize((pts - p["xopt"]) @ p["r"].T, 0.5) @ p["r"].T
        return z[:, 0] ** 2 + 1e6 * np.sum(z[:, 1:] ** 2, axis=-1)

    def _init_f13(self, rng, dim):
        m = random_rotation(rng, dim) @ np.diag(_diag_powers(10.0**0.5, dim)) @ random_rotation(rng, dim)
        return {"xopt": _uniform_xopt(rng, dim), "m": m}

    def _core_f13(self, pts):
        p = self._params
        z = (pts - p["xopt"]) @ p["m"].T
        return z[:, 0] ** 2 + 100.0 * np.sqrt(np.sum(z[:, 1:] ** 2, axis=-1))

    def _init_f14(self, rng, dim):
        return {
            "xopt": _uniform_xopt(rng, dim),
            "r": random_rotation(rng, dim),
            "expo": 2.0 + 4.0 * np.linspace(0.0, 1.0, dim),
        }

    def _core_f14(self, pts):
        p = self._params
        z = (pts - p["xopt"]) @ p["r"].T
        return np.sqrt(np.sum(np.abs(z) ** p["expo"], axis=-1))

    def _init_f15(self, rng, dim):
        r = random_rotation(rng, dim)
        m = r @ np.diag(_diag_powers(10.0**0.5, dim)) @ random_rotation(rng, dim)
        return {"xopt": _uniform_xopt(rng, dim), "r": r, "m": m}

    def _core_f15(self, pts):
        p = self._params
        z = asymmetrize(oscillate((pts - p["xopt"]) @ p["r"].T), 0.2) @ p["m"].T
        return 10.0 * (self.dim - np.sum(np.cos(2 * np.pi * z), axis=-1)) + np.sum(z**2, axis=-1)

    def _init_f16(self, rng, dim):
        r = random_rotation(rng, dim)
        m = r @ np.diag(_diag_powers(0.01**0.5, dim)) @ random_rotation(rng, dim)
        k = np.arange(12)
        ak = 0.5**k
        bk = 3.0**k
        f0 = float(np.sum(ak * np.cos(np.pi * bk)))
        return {"xopt": _uniform_xopt(rng, dim), "r": r, "m": m, "ak": ak, "bk": bk, "f0": f0}

    def _core_f16(self, pts):
        p = self._params
        z = oscillate((pts - p["xopt"]) @ p["r"].T) @ p["m"].T
        inner = np.sum(
            p["ak"][None, None, :] * np.cos(2 * np.pi * p["bk"][None, None, :] * (z[:, :, None] + 0.5)),
            axis=-1,
        )
        core = 10.0 * (np.sum(inner, axis=-1) / self.dim - p["f0"]) ** 3
        return core + (10.0 / self.dim) * boundary_penalty(pts, 1.0)

    def _init_schaffers(self, rng, dim, condition):
        r = random_rotation(rng, dim)
        m = np.diag(_diag_powers(condition**0.5, dim)) @ random_rotation(rng, dim)
        return {"xopt": _uniform_xopt(rng, dim), "r": r, "m": m}

    def _core_schaffers(self, pts):
        p = self._params
        z = asymmetrize((pts - p["xopt"]) @ p["r"].T, 0.5) @ p["m"].T
        if self.dim == 1:
            s = z[:, 0] ** 2
            mean = np.sqrt(np.sqrt(s)) * (np.sin(50.0 * s**0.1) ** 2 + 1.0)
        else:
            s = z[:, :-1] ** 2 + z[:, 1:] ** 2
            mean = np.mean(s**0.25 * (np.sin(50.0 * s**0.1) ** 2 + 1.0), axis=-1)
        return mean**2 + boundary_penalty(pts, 10.0)

    def _init_f17(self, rng, dim):
        return self._init_schaffers(rng, dim, 10.0)

    _core_f17 = _core_schaffers

    def _init_f18(self, rng, dim):
        return self._init_schaffers(rng, dim, 1000.0)

    _core_f18 = _core_schaffers

    def _init_f19(self, rng, dim):
        c = max(1.0, dim**0.5 / 8.0)
        m = c * random_rotation(rng, dim)
        xopt = (m.T @ (0.5 * np.ones(dim))) / c**2
        return {"xopt": xopt, "m": m}

    def _core_f19(self, pts):
        p = self._params
        z = (pts - p["xopt"]) @ p["m"].T + 1.0
        if self.dim == 1:
            f2 = 100.0 * (z[:, :1] ** 2 - z[:, :1]) ** 2 + (1.0 - z[:, :1]) ** 2
            denom = 1.0
        else:
            f2 = 100.0 * (z[:, :-1] ** 2 - z[:, 1:]) ** 2 + (1.0 - z[:, :-1]) ** 2
            denom = self.dim - 1.0
        return 10.0 + 10.0 * np.sum(f2 / 4000.0 - np.cos(f2), axis=-1) / denom

    def _init_f20(self, rng, dim):
        xopt = 0.5 * _SCHWEFEL_X * _signs(rng, dim)
        return {"xopt": xopt, "scales": _diag_powers(10.0**0.5, dim)}

    def _core_f20(self, pts):
        p = self._params
        b = 2.0 * np.abs(p["xopt"])
        xhat = 2.0 * np.sign(p["xopt"]) * pts
        xhat[:, 1:] = xhat[:, 1:] + 0.25 * (xhat[:, :-1] - b[:-1])
        z = 100.0 * (p["scales"] * (xhat - b) + b)
        pen = 0.01 * np.sum(np.maximum(0.0, np.abs(z) - 500.0) ** 2, axis=-1)
        core = 0.01 * (_SCHWEFEL_F - np.mean(z * np.sin(np.sqrt(np.abs(z))), axis=-1))
        return core + pen

    def _init_gallagher(self, rng, dim, n_peaks, peak_shrink, top_condition):
        r = random_rotation(rng, dim)
        conditions = 1000.0 ** np.linspace(0.0, 1.0, n_peaks - 1)
        conditions = np.concatenate(([top_condition], rng.permutation(conditions)))
        scales = np.empty((n_peaks, dim))
        for i, cond in enumerate(conditions):
            scales[i] = rng.permutation(cond ** np.linspace(-0.5, 0.5, dim))
        weights = np.concatenate(([10.0], np.linspace(1.1, 9.1, n_peaks - 1)))
        # peak centers live in the rotated space
        peaks = peak_shrink * rng.uniform(-5.0, 5.0, (n_peaks, dim))
        peaks[0] *= 0.8
        xopt = r.T @ peaks[0]
        peaks[0] = r @ xopt  # re-derive so the exposed optimum is exact
        return {"xopt": xopt, "r": r, "peaks": peaks, "peak_scales": scales, "weights": weights}

    def _core_gallagher(self, pts):
        p = self._params
        zr = pts @ p["r"].T
        diff = zr[:, None, :] - p["peaks"][None, :, :]
        quad = np.sum(p["peak_scales"][None, :, :] * diff**2, axis=-1)
        peak_vals = p["weights"][None, :] * np.exp((-0.5 / self.dim) * quad)
        core = oscillate(10.0 - np.max(peak_vals, axis=-1)) ** 2
        return core + boundary_penalty(pts, 1.0)

    def _init_f21(self, rng, dim):
        return self._init_gallagher(rng, dim, 101, 1.0, 1000.0**0.5)

    _core_f21 = _core_gallagher

    def _init_f22(self, rng, dim):
        return self._init_gallagher(rng, dim, 21, 0.98, 1000.0)

    _core_f22 = _core_gallagher

    def _init_f23(self, rng, dim):
        m = random_rotation(rng, dim) @ np.diag(_diag_powers(100.0**0.5, dim)) @ random_rotation(rng, dim)
        return {"xopt": _uniform_xopt(rng, dim), "m": m, "two_k": 2.0 ** np.arange(1, 33)}

    def _core_f23(self, pts):
        p = self._params
        d = self.dim
        z = (pts - p["xopt"]) @ p["m"].T
        arr = z[:, :, None] * p["two_k"][None, None, :]
        frac = np.sum(np.abs(arr - np.round(arr)) / p["two_k"][None, None, :], axis=-1)
        prod = np.prod((1.0 + np.arange(1, d + 1)[None, :] * frac) ** (10.0 / d**1.2), axis=-1)
        return (10.0 / d**2) * (prod - 1.0) + boundary_penalty(pts, 1.0)

    def _init_f24(self, rng, dim):
        r = random_rotation(rng, dim)
        m = r @ np.diag(_diag_powers(100.0**0.5, dim)) @ random_rotation(rng, dim)
        mu1 = 2.5
        xopt = 0.5 * mu1 * _signs(rng, dim)
        return {"xopt": xopt, "m": m, "mu1": mu1}

    def _core_f24(self, pts):
        p = self._params
        d = self.dim
        mu1 = p["mu1"]
        # the standard constant goes non-positive for dim 1; clamp keeps the
        # two-funnel structure well defined there
        s = max(1.0 - 0.5 / ((d + 20.0) ** 0.5 - 4.1), 1e-2)
        mu2 = -(((mu1**2 - 1.0) / s) ** 0.5)
        xhat = 2.0 * np.sign(p["xopt"]) * pts
        branch = np.minimum(
            np.sum((xhat - mu1) ** 2, axis=-1),
            d + s * np.sum((xhat - mu2) ** 2, axis=-1),
        )
        z = (xhat - mu1) @ p["m"].T
        rast = 10.0 * (d - np.sum(np.cos(2 * np.pi * z), axis=-1))
        return branch + rast + 1e4 * boundary_penalty(pts, 1.0)


def create_component(fid: int, iid: int, dim: int) -> ComponentProblem:
    """Instantiate component function `fid` at instance `iid` in `dim`."""
    return ComponentProblem(fid, iid, dim)


def optimum_location(cp: ComponentProblem) -> np.ndarray:
    return cp.optimum_location


def evaluate_raw(cp: ComponentProblem, x) -> float | np.ndarray:
    return cp.evaluate_raw(x)
