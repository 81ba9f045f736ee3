"""Recomputing the per-function scale factors.

Each component's sampled precision range is summarized into one number
that normalizes its log-precision before blending. This demo recomputes
a small table (fewer samples than the defaults used) and compares it to
the built-in factors.
"""

import numpy as np

from bbobmix import (
    Aggregator,
    DEFAULT_SCALE_FACTORS,
    compare_to_default,
    compute_scale_table,
    equal_scale_table,
)


def main():
    print("Recomputing scale factors with 5 000 samples per (function, dim):")
    table = compute_scale_table([2, 5, 10], 5_000, seed=1, agg=Aggregator.MID_RANGE)
    dev, flagged = compare_to_default(table)

    print(f"\n{'id':>3}  {'default':>8}  {'computed':>9}  {'deviation':>9}")
    for fid in range(1, 25):
        mark = "  <-- off by more than 15%" if flagged[fid - 1] else ""
        print(f"{fid:>3}  {DEFAULT_SCALE_FACTORS[fid - 1]:8.1f}  {table.values[fid - 1]:9.1f}"
              f"  {dev[fid - 1] * 100:8.1f}%{mark}")
    print(f"\n{int(np.sum(~flagged))} of 24 within 15% even at this reduced sample count.")

    print("\nThe EQUAL aggregator skips calibration entirely:")
    print(f"  {equal_scale_table().values[:6]} ... (all 10.0, making the")
    print("  log-precision rescaling a pure round trip)")


if __name__ == "__main__":
    main()
