"""Round-trip check between hypergraph colorings and avoiding subgroups.

Runs the partitions-to-subgroups and subgroups-to-partitions translations
on a built-in edge family. Example:

    python3 scripts/run_bridge_roundtrip.py --p 3 --n 4 --family ap3
"""

import argparse
import sys

from fprec.experiments import exp_ep_roundtrip


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--family", choices=["all-pairs", "ap3", "gallai"], default="ap3")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    report = exp_ep_roundtrip(args.p, args.n, args.family, seed=args.seed)
    print(report.to_json())
    print(f"# wall time: {report.wall_time_s:.3f}s", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
