"""Tour of the 24 component functions.

Creates a few instances, shows their optimum locations, and verifies
that the exposed optimum really is the best point seen under random
sampling.
"""

import numpy as np

from bbobmix import FUNCTION_NAMES, create_component


def main():
    dim = 2
    print(f"All 24 component functions in dimension {dim}, instance 1:\n")
    print(f"{'id':>3}  {'name':<32} {'optimum location':<28} value")
    for fid in range(1, 25):
        cp = create_component(fid, 1, dim)
        loc = ", ".join(f"{v:+.3f}" for v in cp.optimum_location)
        print(f"{fid:>3}  {FUNCTION_NAMES[fid]:<32} [{loc}]   {cp.evaluate_raw(cp.optimum_location):.1f}")

    print("\nThe optimum beats 10 000 random samples on every function:")
    rng = np.random.default_rng(0)
    pts = rng.uniform(-5, 5, (10_000, dim))
    for fid in (1, 8, 15, 21, 24):
        cp = create_component(fid, 1, dim)
        best_random = float(np.min(cp.evaluate_raw(pts)))
        print(f"  F{fid:>2} {FUNCTION_NAMES[fid]:<28} best random sample {best_random:10.4f}"
              f"  >= optimum value {cp.evaluate_raw(cp.optimum_location):.1f}")

    print("\nInstances reshuffle the landscape but keep its character:")
    cp1 = create_component(21, 1, dim)
    cp2 = create_component(21, 2, dim)
    x = np.zeros(dim)
    print(f"  Gallagher instance 1 at the origin: {cp1.evaluate_raw(x):.4f}")
    print(f"  Gallagher instance 2 at the origin: {cp2.evaluate_raw(x):.4f}")


if __name__ == "__main__":
    main()
