"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import itertools
import random
import time

from fprec.bohr import bohr_deficiency, meets_all_subgroups_oracle
from fprec.cli import main
from fprec.colorings import (
    Graph,
    Hypergraph,
    INFINITE,
    build_cayley,
    chromatic_number_bruteforce,
    chromatic_number_exact,
    hypergraph_chromatic,
    hypergraph_chromatic_bruteforce,
    verify,
)
from fprec.experiments import exp_poincare, exp_s_square, run_bridge_roundtrip
from fprec.families import ap3_hypergraph, weight_d_set
from fprec.fpgroup import (
    FpVec,
    all_vectors,
    hom_apply,
    hom_from_basis_images,
    rref_rank,
)
from fprec.setops import VecSet


def report(name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def random_vecset(rng, p, n, size):
    pool = list(itertools.product(range(p), repeat=n))
    return VecSet(p, n, tuple(FpVec(p, c) for c in rng.sample(pool, size)))


def test_criterion_1_s_square_reproduction():
    ok = True
    for W in range(2, 7):
        t0 = time.perf_counter()
        rep = exp_s_square(W)
        elapsed = time.perf_counter() - t0
        tags = set(rep.results["component_histogram"])
        ok &= rep.results["chi"] == 2
        ok &= tags <= {"singleton", "single-edge", "path"}
        ok &= elapsed < 60.0
        ok &= rep.ok
    report("1 s-square chi=2 and component trichotomy (W=2..6)", ok)


def test_criterion_2_bridge_soundness():
    ok = True
    rng = random.Random(2024)
    # p=2: 200 sampled 2-uniform edge-families on N <= 5 vertices.
    sampled = 0
    while sampled < 200:
        N = rng.randrange(2, 6)
        pairs = list(itertools.combinations(range(1, N + 1), 2))
        edges = rng.sample(pairs, rng.randrange(1, len(pairs) + 1))
        rep = run_bridge_roundtrip(2, Hypergraph.from_edge_lists(N, edges))
        ok &= rep.ok and rep.results["direction_a_uncertified"] == 0
        sampled += 1
    # p=3: all 3-uniform edge-families on N <= 4 vertices.
    for N in (3, 4):
        triples = list(itertools.combinations(range(1, N + 1), 3))
        for count in range(1, len(triples) + 1):
            for edges in itertools.combinations(triples, count):
                rep = run_bridge_roundtrip(3, Hypergraph.from_edge_lists(N, edges))
                ok &= rep.ok and rep.results["direction_a_uncertified"] == 0
    report("2 bridge soundness (p=2 N<=5 sampled, p=3 N<=4 exhaustive)", ok)


def test_criterion_3_solver_exactness():
    ok = True
    rng = random.Random(77)
    for _ in range(100):
        n = rng.randrange(1, 11)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice([0.2, 0.5, 0.8])
        ]
        g = Graph.from_edges(n, edges)
        chi, coloring = chromatic_number_exact(g)
        ok &= chi == chromatic_number_bruteforce(g)
        ok &= coloring is not None and verify(coloring, g)[0]
    for _ in range(50):
        n = rng.randrange(3, 9)
        edges = [
            rng.sample(range(1, n + 1), rng.randrange(2, min(n, 4) + 1))
            for _ in range(rng.randrange(1, 8))
        ]
        hg = Hypergraph.from_edge_lists(n, edges)
        ok &= hypergraph_chromatic(hg) == hypergraph_chromatic_bruteforce(hg)
    report("3 solver exactness vs exhaustive search (100 graphs, 50 hypergraphs)", ok)


def test_criterion_4_deficiency_oracle_agreement():
    ok = True
    rng = random.Random(4)
    for p, n, count in ((3, 4, 200), (2, 6, 200)):
        for _ in range(count):
            S = random_vecset(rng, p, n, rng.randrange(1, min(p**n, 24)))
            rep = bohr_deficiency(S, 3)
            for k in (1, 2, 3):
                scan_meets = rep.deficient_at is None or rep.deficient_at > k
                ok &= meets_all_subgroups_oracle(S, k) == scan_meets
    report("4 deficiency scan vs element-listing oracle (400 random sets)", ok)


def test_criterion_5_weight_family_facts():
    ok = True
    for n in range(2, 9):
        rep = bohr_deficiency(weight_d_set(2, n, 1), min(n, 3))
        ok &= rep.deficient_at == 1
        ok &= rep.witness is not None and rep.witness.annihilator.entries == ((1,) * n,)
    for k in (1, 2, 3):
        for n in range(2**k + 1, 10):
            rep = bohr_deficiency(weight_d_set(2, n, 2), k)
            ok &= rep.outcome == "recurrent" and rep.recurrent_up_to == k
    report("5 weight-1 deficiency with parity witness; weight-2 recurrence for n > 2^k", ok)


def test_criterion_6_poincare_pigeonhole():
    ok = True
    for p, n, k in ((2, 5, 1), (2, 5, 2), (3, 4, 1)):
        rep = exp_poincare(p, n, k, 500, seed=6)
        ok &= rep.results["failures"] == 0 and rep.ok
    report("6 pigeonhole difference-set recurrence (3 configs x 500 trials)", ok)


def test_criterion_7_image_inequality():
    ok = True
    rng = random.Random(7)
    p = 2
    pairs = [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2)]
    per_pair = 17  # 6 * 17 = 102 >= 100 random R
    for m, n in pairs:
        targets = list(all_vectors(p, n))
        surjections = []
        for cols in itertools.product(targets, repeat=m):
            M = hom_from_basis_images(list(cols))
            if rref_rank(M)[1] == n:
                surjections.append(M)
        pool = list(all_vectors(p, m))
        V_m = VecSet.full(p, m)
        V_n = VecSet.full(p, n)
        for _ in range(per_pair):
            R = VecSet(p, m, tuple(rng.sample(pool, rng.randrange(1, len(pool) + 1))))
            chi_R, _ = chromatic_number_exact(build_cayley(V_m, R))
            for rho in surjections:
                image = VecSet(p, n, tuple(hom_apply(rho, x) for x in R.elements))
                chi_img, _ = chromatic_number_exact(build_cayley(V_n, image))
                ok &= chi_img >= chi_R or (chi_img == INFINITE)
    report("7 image inequality over exhaustive surjections (p=2, m<=4, n<=2)", ok)


def test_criterion_8_van_der_waerden_desk_check():
    t0 = time.perf_counter()
    chi8 = hypergraph_chromatic(ap3_hypergraph(8))
    chi9 = hypergraph_chromatic(ap3_hypergraph(9))
    elapsed = time.perf_counter() - t0

    def two_colorable_scan(N):
        hg = ap3_hypergraph(N)
        for bits in itertools.product((1, 2), repeat=N - 1):
            colors = {1: 1, **{v: bits[v - 2] for v in range(2, N + 1)}}
            if all(len({colors[v] for v in e}) > 1 for e in hg.edges):
                return True
        return False

    ok = chi8 == 2 and chi9 >= 3 and elapsed < 10.0
    ok &= two_colorable_scan(8) and not two_colorable_scan(9)
    report("8 3-AP hypergraph: chi([8])=2, chi([9])>=3, matching 2-coloring scan", ok)


def test_criterion_9_determinism(tmp_path):
    ok = True
    runs = [
        ["exp", "poincare", "--p", "2", "--n", "5", "--k", "2", "--trials", "50",
         "--seed", "11"],
        ["exp", "s-square", "--w", "3"],
        ["exp", "ep-roundtrip", "--p", "3", "--n", "4", "--family", "ap3", "--seed", "1"],
        ["exp", "bog-scan", "--p", "3", "--d", "3", "--n", "2", "--r", "2",
         "--budget", "25", "--seed", "9"],
    ]
    for i, args in enumerate(runs):
        a = tmp_path / f"a{i}.json"
        b = tmp_path / f"b{i}.json"
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        ok &= a.read_bytes() == b.read_bytes()
    report("9 byte-identical reports across reruns", ok)
