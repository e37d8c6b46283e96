"""Experiment drivers with reproducible JSON reporting.

Each driver returns an ExperimentReport; every witness embedded in a report
is validated before the report is emitted.  Reports serialize to
byte-identical JSON across reruns with identical inputs (timing is kept out
of the serialized payload and reported separately).
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from . import __version__
from .bohr import DeficiencyReport, bohr_deficiency
from .colorings import (
    CellPartition,
    Hypergraph,
    INFINITE,
    build_cayley,
    characters_to_coloring,
    chromatic_number_exact,
    coloring_of_partition,
    coloring_to_avoiding_subgroup,
    components_classify,
    find_proper_partition,
    hypergraph_chromatic,
    partition_from_coloring,
    verify,
)
from .families import (
    ap3_hypergraph,
    family_indicator_set,
    fin2_vertices,
    gallai_square_hypergraph,
    square_connection_set,
    weight_d_set,
)
from .fpgroup import (
    FpVec,
    ResourceGuardError,
    Subgroup,
    all_vectors,
    enum_codim_subgroups,
    gaussian_binomial,
    hom_from_basis_images,
)
from .setops import VecSet, dfold_distinct_sumset, difference_set, preimage_intersect

SCHEMA_VERSION = 1


def _chi_json(chi) -> object:
    return "inf" if chi == INFINITE else chi


@dataclass
class ExperimentReport:
    name: str
    parameters: dict
    results: dict
    verdicts: dict[str, bool]
    input_digests: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "experiment": self.name,
            "parameters": self.parameters,
            "results": self.results,
            "verdicts": self.verdicts,
            "input_digests": self.input_digests,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        # Wall time deliberately excluded: reports must be byte-identical
        # across reruns with identical inputs.
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _vecset_digest(S: VecSet) -> str:
    from .fileio import digest_of_text

    body = f"p={S.p} n={S.n};" + ";".join(
        ",".join(str(c) for c in v.coords) for v in S.elements
    )
    return digest_of_text(body)


def _hypergraph_digest(hg: Hypergraph) -> str:
    from .fileio import digest_of_text

    body = f"N={hg.n};" + ";".join(
        ",".join(str(v) for v in e) for e in sorted(sorted(e) for e in hg.edges)
    )
    return digest_of_text(body)


def _guard(condition: bool, message: str) -> None:
    if not condition:
        raise ResourceGuardError(message)


def exp_s_square(W: int) -> ExperimentReport:
    """Chromatic number and component census of the square-difference Cayley
    graph on 2-element window subsets."""
    if not 2 <= W <= 8:
        raise ValueError(f"W must lie in [2, 8], got {W}")
    t0 = time.perf_counter()
    V = fin2_vertices(W)
    S = square_connection_set(W)
    cay = build_cayley(V, S)
    chi, coloring = chromatic_number_exact(cay)
    comps = components_classify(cay)
    histogram: dict[str, int] = {}
    for tag, _ in comps:
        histogram[tag] = histogram.get(tag, 0) + 1
    coloring_ok, _ = verify(coloring, cay) if coloring is not None else (False, None)
    verdicts = {
        "chi_is_2": chi == 2,
        "coloring_valid": coloring_ok,
        "components_in_trichotomy": all(
            tag in ("singleton", "single-edge", "path") for tag, _ in comps
        ),
    }
    results = {
        "chi": _chi_json(chi),
        "num_vertices": len(V),
        "num_edges": len(cay.graph.edges()),
        "component_histogram": dict(sorted(histogram.items())),
        "coloring": [coloring[i] for i in range(len(V))] if coloring else None,
    }
    return ExperimentReport(
        "s_square",
        {"W": W},
        results,
        verdicts,
        {"vertices": _vecset_digest(V), "connection": _vecset_digest(S)},
        time.perf_counter() - t0,
    )


def _set_partitions(n: int):
    """All set partitions of [1, n] via restricted growth strings."""

    def rec(v: int, rgs: list[int], k: int):
        if v > n:
            yield list(rgs)
            return
        for c in range(1, k + 2):
            rgs.append(c)
            yield from rec(v + 1, rgs, max(k, c))
            rgs.pop()

    for rgs in rec(1, [], 0):
        yield partition_from_coloring({v: c for v, c in zip(range(1, n + 1), rgs)})


def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _random_partition(rng: random.Random, n: int, max_cells: int) -> CellPartition:
    colors = {v: rng.randrange(1, max_cells + 1) for v in range(1, n + 1)}
    return partition_from_coloring(colors)


def _avoiding_subgroups(
    E_fam: VecSet, k_max: int, budget: int
) -> tuple[list[Subgroup], int, int]:
    """Avoiding subgroups of codim 1..k_max; returns (found, tested, k_used)."""
    found = []
    tested = 0
    k_used = 0
    for k in range(1, k_max + 1):
        if tested + gaussian_binomial(E_fam.n, k, E_fam.p) > budget:
            break
        for H in enum_codim_subgroups(E_fam.p, E_fam.n, k):
            tested += 1
            ok, _ = verify(H, E_fam)
            if ok:
                found.append(H)
        k_used = k
    return found, tested, k_used


def run_bridge_roundtrip(
    p: int,
    hg: Hypergraph,
    *,
    seed: int = 0,
    partition_samples: int = 500,
    subgroup_budget: int = 100_000,
    k_max: int | None = None,
) -> ExperimentReport:
    """Exercise both directions of the coloring <-> avoiding-subgroup bridge.

    Direction (a): every proper r-cell partition yields a subgroup of
    codimension <= r; for p-uniform families it must avoid the family's
    indicator vectors.  Direction (b): every avoiding codim-k subgroup yields
    a proper partition with <= p^k cells.  For families whose edge sizes are
    divisible by p but larger than p, direction (a) avoidance is recorded
    observationally rather than asserted.
    """
    t0 = time.perf_counter()
    N = hg.n
    _guard(N <= 12, f"N={N} exceeds the bridge experiment bound 12")
    if p not in (2, 3, 5):
        raise ValueError(f"p must be one of 2, 3, 5, got {p}")
    for e in hg.edges:
        if len(e) % p != 0:
            raise ValueError(f"edge {sorted(e)} has size not divisible by p={p}")
    uniform = all(len(e) == p for e in hg.edges)
    chi = hypergraph_chromatic(hg)
    E_fam = family_indicator_set(hg, p)

    # Direction (a): partitions -> subgroups.
    if _bell(N) <= 5000:
        partitions = list(_set_partitions(N))
        sampling = "exhaustive"
    else:
        rng = random.Random(seed)
        partitions = [_random_partition(rng, N, min(N, 4)) for _ in range(partition_samples)]
        sampling = "sampled"
    violations: list[str] = []
    uncertified = 0
    proper_count = 0
    for part in partitions:
        color_of = coloring_of_partition(part)
        mono = any(
            len({color_of[v] for v in e}) == 1 for e in hg.edges
        )
        if mono:
            continue
        proper_count += 1
        H = coloring_to_avoiding_subgroup(part, hg, p)
        if H.codim > len(part):
            violations.append(f"codim {H.codim} exceeds cell count {len(part)}")
        avoid_ok, _ = verify(H, E_fam)
        if not avoid_ok:
            if uniform:
                violations.append(
                    f"uniform family: subgroup from partition {sorted(map(sorted, part))} "
                    "fails to avoid the indicator set"
                )
            else:
                uncertified += 1

    # Direction (b): avoiding subgroups -> partitions.
    if k_max is None:
        k_max = N
    found, tested, k_used = _avoiding_subgroups(E_fam, k_max, subgroup_budget)
    for H in found:
        part = characters_to_coloring(H.annihilator.row_vecs(), N)
        proper, bad = verify(part, hg)
        if not proper:
            violations.append(
                f"partition induced by avoiding subgroup has monochromatic edge {bad}"
            )
        if len(part) > p**H.codim:
            violations.append(
                f"induced partition has {len(part)} cells > p^k = {p**H.codim}"
            )

    verdicts = {"no_violations": not violations}
    results = {
        "N": N,
        "hypergraph_chi": chi,
        "uniform": uniform,
        "partition_sampling": sampling,
        "partitions_tested": len(partitions),
        "proper_partitions": proper_count,
        "subgroups_tested": tested,
        "avoiding_subgroups": len(found),
        "subgroup_codim_scanned": k_used,
        "direction_a_uncertified": uncertified,
        "violations": violations,
    }
    return ExperimentReport(
        "ep_roundtrip",
        {"p": p, "seed": seed, "k_max": k_max},
        results,
        verdicts,
        {"hypergraph": _hypergraph_digest(hg)},
        time.perf_counter() - t0,
    )


def exp_ep_roundtrip(p: int, N: int, family: str, seed: int = 0) -> ExperimentReport:
    """Bridge roundtrip on a named family: all-pairs, ap3, or gallai squares."""
    if family == "all-pairs":
        hg = Hypergraph.from_edge_lists(N, itertools.combinations(range(1, N + 1), 2))
    elif family == "ap3":
        hg = ap3_hypergraph(N)
    elif family == "gallai":
        W = round(N**0.5)
        if W * W != N:
            raise ValueError(f"gallai family needs a square N, got {N}")
        hg = gallai_square_hypergraph(W)
    else:
        raise ValueError(f"unknown family {family!r}")
    report = run_bridge_roundtrip(p, hg, seed=seed)
    report.parameters["family"] = family
    report.parameters["N"] = N
    return report


def exp_lift_transfer(
    p: int,
    d: int,
    n: int,
    m: int,
    S: VecSet,
    seed: int = 0,
) -> ExperimentReport:
    """Pull S back through a seeded covering homomorphism into the weight-d
    slice, and report deficiency levels side by side (observational)."""
    t0 = time.perf_counter()
    if d % p != 0 or d <= 2:
        raise ValueError(f"d must be > 2 and divisible by p, got d={d}, p={p}")
    if m < p**n:
        raise ValueError(f"m={m} too small for a covering map; need m >= p^n = {p**n}")
    if S.p != p or S.n != n:
        raise ValueError("S must live in F_p^n")
    import math

    _guard(math.comb(m, d) <= 200_000, f"C({m}, {d}) exceeds the slice budget")
    rng = random.Random(seed)
    targets = list(all_vectors(p, n))
    rng.shuffle(targets)
    columns = targets + [rng.choice(targets) for _ in range(m - len(targets))]
    rho = hom_from_basis_images(columns)
    E = weight_d_set(p, m, d)
    S_lift = preimage_intersect(rho, S, E)
    mapped_ok = all(
        verify_mapped in S for verify_mapped in _images(rho, S_lift)
    )
    k_S = _feasible_k_max(p, n, budget=50_000)
    k_lift = _feasible_k_max(p, m, budget=50_000)
    rep_S = bohr_deficiency(S, k_S, "S") if k_S >= 1 else None
    rep_lift = bohr_deficiency(S_lift, k_lift, "S_lift") if k_lift >= 1 else None
    results = {
        "rho_columns": [list(c.coords) for c in columns],
        "lift_size": len(S_lift),
        "slice_size": len(E),
        "deficiency_S": rep_S.to_dict(include_timing=False) if rep_S else None,
        "deficiency_lift": rep_lift.to_dict(include_timing=False) if rep_lift else None,
    }
    verdicts = {"lift_maps_into_S": mapped_ok}
    return ExperimentReport(
        "lift_transfer",
        {"p": p, "d": d, "n": n, "m": m, "seed": seed},
        results,
        verdicts,
        {"S": _vecset_digest(S)},
        time.perf_counter() - t0,
    )


def _images(rho, S_lift: VecSet):
    from .fpgroup import hom_apply

    return [hom_apply(rho, x) for x in S_lift.elements]


def _feasible_k_max(p: int, n: int, budget: int) -> int:
    k = 0
    total = 0
    while k < n:
        nxt = total + gaussian_binomial(n, k + 1, p)
        if nxt > budget:
            break
        total = nxt
        k += 1
    return k


def exp_poincare(p: int, n: int, k: int, trials: int, seed: int = 0) -> ExperimentReport:
    """Pigeonhole shadow of the difference-set recurrence theorem.

    With |E| = p^k + 1, the distinct-difference set of E must meet every
    codim-k subgroup; any failure fails the run.  The |E| = p^k arm is
    observational only.
    """
    t0 = time.perf_counter()
    if not k < n:
        raise ValueError(f"need k < n, got k={k}, n={n}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    _guard(p**n <= 2**14, f"p^n = {p}^{n} exceeds the sampling bound 2^14")
    universe = list(all_vectors(p, n))
    subgroups = list(enum_codim_subgroups(p, n, k))
    rng = random.Random(seed)

    def run_arm(size: int) -> int:
        failures = 0
        for _ in range(trials):
            E = VecSet(p, n, tuple(rng.sample(universe, size)))
            D = difference_set(E, distinct_only=True)
            for H in subgroups:
                if not any(H.contains(x) for x in D.elements):
                    failures += 1
                    break
        return failures

    failures = run_arm(p**k + 1)
    observational_failures = run_arm(p**k)
    verdicts = {"no_failures_at_pigeonhole_size": failures == 0}
    results = {
        "subgroups_per_trial": len(subgroups),
        "failures": failures,
        "observational_failures_at_smaller_size": observational_failures,
        "trials": trials,
    }
    return ExperimentReport(
        "poincare",
        {"p": p, "n": n, "k": k, "trials": trials, "seed": seed},
        results,
        verdicts,
        {},
        time.perf_counter() - t0,
    )


def _family_set(p: int, n: int, selector: str) -> VecSet:
    if selector == "e1":
        return weight_d_set(p, n, 1)
    if selector == "e2":
        if n < 2:
            raise ValueError("e2 needs n >= 2")
        return weight_d_set(p, n, 2)
    if selector == "ep":
        if n < p:
            raise ValueError(f"ep needs n >= p = {p}")
        return weight_d_set(p, n, p)
    if selector == "ap3":
        if n < 3:
            raise ValueError("ap3 needs n >= 3")
        return family_indicator_set(ap3_hypergraph(n), p)
    raise ValueError(f"unknown set family {selector!r}")


def exp_profile_scan(
    p: int,
    family: str,
    n_range: tuple[int, int],
    k_max: int,
    r_max: int,
) -> ExperimentReport:
    """Observational sweep: deficiency level vs Cayley chromatic number."""
    t0 = time.perf_counter()
    lo, hi = n_range
    if lo > hi or lo < 1:
        raise ValueError(f"bad n range {n_range}")
    _guard(p**hi <= 2**12, f"p^n = {p}^{hi} exceeds the scan bound 2^12")
    rows = []
    for n in range(lo, hi + 1):
        S_n = _family_set(p, n, family)
        km = min(k_max, n, _feasible_k_max(p, n, budget=50_000))
        if S_n.contains_zero():
            chi_str: object = "inf"
            deficiency: object = None
            recurrent_to = km
        else:
            V = VecSet.full(p, n)
            cay = build_cayley(V, S_n)
            chi, _ = chromatic_number_exact(cay, max_colors=r_max)
            chi_str = f">{r_max}" if chi == r_max + 1 and chi != INFINITE else _chi_json(chi)
            rep = bohr_deficiency(S_n, km, f"{family}(n={n})")
            deficiency = rep.deficient_at
            recurrent_to = rep.recurrent_up_to
        rows.append(
            {
                "n": n,
                "set_size": len(S_n),
                "deficiency_level": deficiency,
                "recurrent_up_to": recurrent_to,
                "k_max_used": km,
                "chi": chi_str,
            }
        )
    results = {"profile": rows}
    return ExperimentReport(
        "profile_scan",
        {"p": p, "family": family, "n_range": list(n_range), "k_max": k_max, "r_max": r_max},
        results,
        {"completed": True},
        {},
        time.perf_counter() - t0,
    )


def exp_bog_scan(
    p: int,
    d: int,
    n: int,
    r: int,
    budget: int = 200,
    seed: int = 0,
) -> ExperimentReport:
    """Scan r-covers of F_p^n for the least codimension c such that some cell's
    d-fold distinct sumset contains a full codim-c subgroup (observational)."""
    t0 = time.perf_counter()
    if d % p != 0 or d <= 2:
        raise ValueError(f"d must be > 2 and divisible by p, got d={d}, p={p}")
    if r < 1:
        raise ValueError("r must be >= 1")
    _guard(p**n <= 2**12, f"p^n = {p}^{n} exceeds the scan bound 2^12")
    universe = list(all_vectors(p, n))
    size = len(universe)
    c_max = _feasible_k_max(p, n, budget=20_000)
    subgroup_elements = {
        c: [frozenset(x.coords for x in H.elements()) for H in enum_codim_subgroups(p, n, c)]
        for c in range(0, c_max + 1)
    }

    def least_codim(cells: list[VecSet]) -> int | None:
        sums = [dfold_distinct_sumset(A, d).coord_tuples() for A in cells if len(A)]
        for c in range(0, c_max + 1):
            for elems in subgroup_elements[c]:
                if any(elems <= sset for sset in sums):
                    return c
        return None

    if r**size <= budget:
        assignments = itertools.product(range(r), repeat=size)
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        assignments = (
            tuple(rng.randrange(r) for _ in range(size)) for _ in range(budget)
        )
        mode = "random"
    records = []
    for assignment in assignments:
        cells = [
            VecSet(p, n, tuple(v for v, a in zip(universe, assignment) if a == j))
            for j in range(r)
        ]
        c = least_codim(cells)
        records.append(c)
    histogram: dict[str, int] = {}
    for c in records:
        key = "none" if c is None else str(c)
        histogram[key] = histogram.get(key, 0) + 1
    results = {
        "mode": mode,
        "covers_scanned": len(records),
        "c_max_probed": c_max,
        "least_codim_histogram": dict(sorted(histogram.items())),
    }
    return ExperimentReport(
        "bog_scan",
        {"p": p, "d": d, "n": n, "r": r, "budget": budget, "seed": seed},
        results,
        {"completed": True},
        {},
        time.perf_counter() - t0,
    )
