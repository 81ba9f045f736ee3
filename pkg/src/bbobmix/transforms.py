"""Coordinate and value transformations shared by the benchmark components.

All transformations operate on arrays of shape (n, dim) (rows are points)
and are total on finite inputs: logarithms and powers of intermediate
values are guarded so no input produces inf or nan.
"""

from __future__ import annotations

import numpy as np

# Arguments of log/pow are clamped here to keep evaluation finite.
TINY = 1e-300
# Cap on exponents fed to exp(); keeps later squares/products finite too.
_EXP_CAP = 150.0


def oscillate(x: np.ndarray) -> np.ndarray:
    """Oscillatory monotone map, applied elementwise.

    Maps 0 to 0 and preserves sign; roughly identity in magnitude with a
    multiplicative ripple.
    """
    x = np.asarray(x, dtype=float)
    out = x.copy()
    pos = x > 0
    neg = x < 0
    yp = np.log(np.maximum(x[pos], TINY)) / 0.1
    out[pos] = np.exp(
        np.minimum(0.1 * (yp + 0.49 * (np.sin(yp) + np.sin(0.79 * yp))), _EXP_CAP)
    )
    yn = np.log(np.maximum(-x[neg], TINY)) / 0.1
    out[neg] = -np.exp(
        np.minimum(0.1 * (yn + 0.49 * (np.sin(0.55 * yn) + np.sin(0.31 * yn))), _EXP_CAP)
    )
    return out


def asymmetrize(z: np.ndarray, beta: float) -> np.ndarray:
    """Asymmetric exponent distortion: positive entries are raised to an
    index-dependent power > 1.

    z has shape (n, dim). Computed in log space with a capped exponent so
    large positive inputs stay finite.
    """
    z = np.asarray(z, dtype=float)
    n, dim = z.shape
    expo = 1.0 + beta * np.linspace(0.0, 1.0, dim)[None, :] * np.sqrt(np.maximum(z, 0.0))
    out = z.copy()
    pos = z > 0
    logz = np.log(np.maximum(z, TINY))
    out[pos] = np.exp(np.minimum((expo * logz)[pos], _EXP_CAP))
    return out


def boundary_penalty(x: np.ndarray, factor: float) -> np.ndarray:
    """Quadratic penalty for leaving [-5, 5]^dim, per row."""
    xout = np.maximum(0.0, np.abs(x) - 5.0)
    return factor * np.sum(xout**2, axis=-1)


def random_rotation(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Random orthonormal matrix via Gram-Schmidt on a standard-normal draw.

    Redraws on (numerically) rank-deficient input, which has probability ~0.
    """
    while True:
        b = rng.standard_normal((dim, dim))
        for i in range(dim):
            for j in range(i):
                b[i] -= np.dot(b[i], b[j]) * b[j]
            norm = np.sqrt(np.sum(b[i] ** 2))
            if norm < 1e-12:
                break
            b[i] /= norm
        else:
            return b
