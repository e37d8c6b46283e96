"""Pigeonhole recurrence check for difference sets of large random sets.

Draws random subsets of size p^k + 1 in F_p^n and verifies each difference
set meets every subgroup of codimension k. Example:

    python3 scripts/run_poincare.py --p 2 --n 5 --k 2 --trials 500
"""

import argparse
import sys

from fprec.experiments import exp_poincare


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    report = exp_poincare(args.p, args.n, args.k, args.trials, seed=args.seed)
    print(report.to_json())
    print(f"# wall time: {report.wall_time_s:.3f}s", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
