"""Command-line entry point.

Verbs: deficiency, chi, cayley, hypergraph-chi, bridge, exp <name>.
Exit codes: 0 success, 2 validation failure or bad input, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bohr import bohr_deficiency
from .colorings import INFINITE, build_cayley, chromatic_number_exact, hypergraph_chromatic, verify
from .experiments import (
    ExperimentReport,
    exp_bog_scan,
    exp_ep_roundtrip,
    exp_lift_transfer,
    exp_poincare,
    exp_profile_scan,
    exp_s_square,
    run_bridge_roundtrip,
)
from .families import weight_d_set
from .fileio import (
    read_graph,
    read_hypergraph,
    read_vecset,
    sha256_of_file,
    write_graph,
)
from .fpgroup import ResourceGuardError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3


def _flatten(prefix: str, value, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    elif isinstance(value, (list, tuple)):
        rows.append((prefix, json.dumps(value)))
    else:
        rows.append((prefix, json.dumps(value)))


def _emit(doc: dict, out: str | None, fmt: str) -> None:
    if fmt == "json":
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        rows: list[tuple[str, str]] = []
        _flatten("", doc, rows)
        text = "".join(f"{k}\t{v}\n" for k, v in rows)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report_exit(report: ExperimentReport, out: str | None, fmt: str) -> int:
    _emit(report.to_dict(), out, fmt)
    print(f"# wall time: {report.wall_time_s:.3f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VALIDATION


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write the report to this path")
    sub.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fprec")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("deficiency", help="Bohr deficiency scan of a vector set")
    s.add_argument("--in", dest="infile", required=True, help="vector set file")
    s.add_argument("--k-max", type=int, required=True)
    _add_common(s)

    s = subs.add_parser("chi", help="exact chromatic number of a graph or Cayley graph")
    s.add_argument("--graph", help="edge-list file")
    s.add_argument("--vertices", help="vertex set file (Cayley mode)")
    s.add_argument("--conn", help="connection set file (Cayley mode)")
    _add_common(s)

    s = subs.add_parser("cayley", help="build a Cayley graph and export its edge list")
    s.add_argument("--vertices", required=True)
    s.add_argument("--conn", required=True)
    s.add_argument("--out", required=True)

    s = subs.add_parser("hypergraph-chi", help="exact hypergraph chromatic number")
    s.add_argument("--in", dest="infile", required=True)
    _add_common(s)

    s = subs.add_parser("bridge", help="coloring/subgroup bridge roundtrip on a hypergraph")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    _add_common(s)

    s = subs.add_parser("exp", help="run a named experiment")
    s.add_argument("name", choices=(
        "s-square", "ep-roundtrip", "lift-transfer", "poincare", "profile-scan", "bog-scan",
    ))
    s.add_argument("--p", type=int, default=2)
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--n-hi", type=int, help="upper end of the n range (profile-scan)")
    s.add_argument("--k-max", type=int, default=2)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--d", type=int, default=4)
    s.add_argument("--m", type=int)
    s.add_argument("--w", type=int, default=4)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--r-max", type=int, default=6)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--budget", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--family", default="ep")
    s.add_argument("--set", dest="setfile", help="vector set file (lift-transfer)")
    _add_common(s)

    return parser


def _run_exp(args: argparse.Namespace) -> ExperimentReport:
    if args.name == "s-square":
        return exp_s_square(args.w)
    if args.name == "ep-roundtrip":
        return exp_ep_roundtrip(args.p, args.n, args.family, seed=args.seed)
    if args.name == "lift-transfer":
        m = args.m if args.m is not None else args.p**args.n
        if args.setfile:
            S = read_vecset(args.setfile)
        else:
            S = weight_d_set(args.p, args.n, min(args.p, args.n))
        report = exp_lift_transfer(args.p, args.d, args.n, m, S, seed=args.seed)
        if args.setfile:
            report.input_digests["S_file"] = sha256_of_file(args.setfile)
        return report
    if args.name == "poincare":
        return exp_poincare(args.p, args.n, args.k, args.trials, seed=args.seed)
    if args.name == "profile-scan":
        hi = args.n_hi if args.n_hi is not None else args.n
        return exp_profile_scan(args.p, args.family, (args.n, hi), args.k_max, args.r_max)
    if args.name == "bog-scan":
        return exp_bog_scan(args.p, args.d, args.n, args.r, budget=args.budget, seed=args.seed)
    raise ValueError(f"unknown experiment {args.name!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "deficiency":
            S = read_vecset(args.infile)
            report = bohr_deficiency(S, args.k_max, set_id=Path(args.infile).name)
            doc = report.to_dict()
            doc["input_digest"] = sha256_of_file(args.infile)
            _emit(doc, args.out, args.format)
            return EXIT_OK

        if args.command == "chi":
            t0 = time.perf_counter()
            if args.graph:
                g = read_graph(args.graph)
                digests = {"graph": sha256_of_file(args.graph)}
            elif args.vertices and args.conn:
                g = build_cayley(read_vecset(args.vertices), read_vecset(args.conn))
                digests = {
                    "vertices": sha256_of_file(args.vertices),
                    "connection": sha256_of_file(args.conn),
                }
            else:
                raise ValueError("chi needs --graph or both --vertices and --conn")
            chi, coloring = chromatic_number_exact(g)
            valid = verify(coloring, g)[0] if coloring is not None else None
            doc = {
                "chi": "inf" if chi == INFINITE else chi,
                "coloring": coloring and [coloring[i] for i in sorted(coloring)],
                "coloring_valid": valid,
                "input_digests": digests,
                "wall_time_s": round(time.perf_counter() - t0, 3),
            }
            _emit(doc, args.out, args.format)
            return EXIT_OK if valid in (True, None) else EXIT_VALIDATION

        if args.command == "cayley":
            cay = build_cayley(read_vecset(args.vertices), read_vecset(args.conn))
            write_graph(cay.graph, args.out)
            return EXIT_OK

        if args.command == "hypergraph-chi":
            hg = read_hypergraph(args.infile)
            doc = {
                "N": hg.n,
                "num_edges": len(hg.edges),
                "chi": hypergraph_chromatic(hg),
                "input_digest": sha256_of_file(args.infile),
            }
            _emit(doc, args.out, args.format)
            return EXIT_OK

        if args.command == "bridge":
            hg = read_hypergraph(args.infile)
            report = run_bridge_roundtrip(args.p, hg, seed=args.seed)
            report.input_digests["hypergraph_file"] = sha256_of_file(args.infile)
            return _report_exit(report, args.out, args.format)

        if args.command == "exp":
            return _report_exit(_run_exp(args), args.out, args.format)

        raise ValueError(f"unknown command {args.command!r}")
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
