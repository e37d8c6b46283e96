"""Chromatic number and component census of the square-difference graph.

Sweeps window sizes and prints one report per window. Example:

    python3 scripts/run_s_square.py --w-lo 2 --w-hi 6
"""

import argparse
import sys

from fprec.experiments import exp_s_square


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--w-lo", type=int, default=2)
    ap.add_argument("--w-hi", type=int, default=6)
    args = ap.parse_args()

    for W in range(args.w_lo, args.w_hi + 1):
        report = exp_s_square(W)
        print(report.to_json())
        print(f"# W={W} wall time: {report.wall_time_s:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
