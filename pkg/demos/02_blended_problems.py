"""Building blended problems.

Walks through the pairwise form (two components, one mixing
coefficient) and the general form (up to 24 components, sampled sparse
weights, movable optimum).
"""

import numpy as np

from bbobmix import (
    DEFAULT_SCALE_FACTORS,
    combine_pairwise,
    make_many_affine,
    sample_instance,
)


def main():
    dim = 2

    print("Pairwise blend of Gallagher (F21) and Sphere (F1):")
    for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
        pw = combine_pairwise(21, 1, 1, 1, alpha, dim)
        x = pw.x_opt + np.array([1.0, -0.5])
        print(f"  alpha {alpha:4.2f}: value at optimum {pw.evaluate(pw.x_opt):.1e},"
              f"  one step away {pw.evaluate(x):.4f}")
    print("  alpha 1.0 is pure Gallagher, alpha 0.0 is pure Sphere;")
    print("  in between the landscapes morph smoothly in log-precision space.\n")

    print("Randomly sampled general blend:")
    rng = np.random.default_rng(7)
    weights, instances, x_opt = sample_instance(rng, dim)
    active = np.flatnonzero(weights)
    print(f"  active components: {[int(i) + 1 for i in active]}")
    print(f"  their weights:     {[round(float(weights[i]), 3) for i in active]}")
    print(f"  optimum placed at: {np.round(x_opt, 3)}")

    prob = make_many_affine(weights, instances, x_opt, dim, DEFAULT_SCALE_FACTORS)
    print(f"  value at the optimum: {prob.evaluate(x_opt):.1e} (always exactly 1e-8)")

    pts = rng.uniform(-5, 5, (100_000, dim))
    vals = prob.evaluate(pts)
    print(f"  100 000 random points: min {vals.min():.3e}, median {np.median(vals):.3f},"
          f" max {vals.max():.3f}")
    print("  no point ever evaluates below 1e-8.")


if __name__ == "__main__":
    main()
