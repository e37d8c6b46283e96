"""Deficiency-level and chromatic-number profile of a weight family over n.

Example:

    python3 scripts/run_profile_scan.py --p 2 --family e2 --n-lo 2 --n-hi 8
"""

import argparse
import sys

from fprec.experiments import exp_profile_scan


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--family", choices=["e1", "e2", "ep", "ap3"], default="e2")
    ap.add_argument("--n-lo", type=int, default=2)
    ap.add_argument("--n-hi", type=int, default=8)
    ap.add_argument("--k-max", type=int, default=3)
    ap.add_argument("--r-max", type=int, default=6)
    args = ap.parse_args()

    report = exp_profile_scan(
        args.p, args.family, (args.n_lo, args.n_hi), args.k_max, args.r_max
    )
    print(report.to_json())
    print(f"# wall time: {report.wall_time_s:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
