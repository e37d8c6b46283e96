"""Cayley graphs, exact chromatic numbers, component classification,
and the constructive bridges between colorings and avoiding subgroups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .fpgroup import DualVec, FpVec, Subgroup, pairing
from .setops import VecSet

INFINITE = float("inf")

# A coloring maps vertex -> color index (colors start at 1).
Coloring = dict[int, int]

# A cell partition is a tuple of disjoint nonempty frozensets covering [1, N].
CellPartition = tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 0..n-1 with optional self-loops."""

    n: int
    adj: tuple[frozenset[int], ...]
    self_loops: frozenset[int] = frozenset()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [set() for _ in range(n)]
        loops = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                loops.add(u)
            else:
                adj[u].add(v)
                adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj), frozenset(loops))

    def edges(self) -> list[tuple[int, int]]:
        out = [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]
        out.extend((u, u) for u in sorted(self.self_loops))
        return sorted(out)

    @property
    def has_self_loop(self) -> bool:
        return bool(self.self_loops)


@dataclass(frozen=True)
class CayleyGraph:
    """Cay(V, S): vertices V, with g ~ g' iff g - g' or g' - g lies in S."""

    vertices: tuple[FpVec, ...]
    connection: VecSet
    graph: Graph

    @property
    def has_self_loop(self) -> bool:
        return self.graph.has_self_loop


def build_cayley(V: VecSet, S: VecSet) -> CayleyGraph:
    """Build Cay(V, S) with deterministic (sorted) vertex order."""
    if V.p != S.p or V.n != S.n:
        raise ValueError("vertex set and connection set live in different groups")
    verts = V.elements
    p = V.p
    conn = S.coord_tuples()
    edges: list[tuple[int, int]] = []
    if S.contains_zero():
        edges.extend((i, i) for i in range(len(verts)))
    coords = [v.coords for v in verts]
    for i in range(len(verts)):
        ci = coords[i]
        for j in range(i + 1, len(verts)):
            cj = coords[j]
            diff = tuple((a - b) % p for a, b in zip(ci, cj))
            if diff in conn or tuple((-x) % p for x in diff) in conn:
                edges.append((i, j))
    return CayleyGraph(verts, S, Graph.from_edges(len(verts), edges))


def _as_graph(g: Graph | CayleyGraph) -> Graph:
    return g.graph if isinstance(g, CayleyGraph) else g


def _greedy_clique(g: Graph) -> list[int]:
    """Greedy clique, highest-degree-first with lowest-index tie break."""
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    clique: list[int] = []
    for v in order:
        if all(v in g.adj[u] for u in clique):
            clique.append(v)
    return clique


def _dsatur(g: Graph) -> Coloring:
    """DSATUR heuristic coloring; ties break by degree, then lowest index."""
    colors: Coloring = {}
    sat: list[set[int]] = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    while uncolored:
        v = min(uncolored, key=lambda u: (-len(sat[u]), -len(g.adj[u]), u))
        used = sat[v]
        c = 1
        while c in used:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in g.adj[v]:
            sat[u].add(c)
    return colors


def _find_coloring(g: Graph, r: int) -> Coloring | None:
    """Deterministic backtracking search for a proper r-coloring.

    Branches on the most saturated uncolored vertex; new colors are introduced
    in ascending order, so the search is run-to-run deterministic.
    """
    if g.n == 0:
        return {}
    colors: dict[int, int] = {}
    sat: list[set[int]] = [set() for _ in range(g.n)]

    def pick() -> int:
        best = -1
        key = None
        for v in range(g.n):
            if v in colors:
                continue
            k = (len(sat[v]), len(g.adj[v]), -v)
            if key is None or k > key:
                key = k
                best = v
        return best

    def rec(max_used: int) -> bool:
        if len(colors) == g.n:
            return True
        v = pick()
        if len(sat[v]) >= r:
            return False
        for c in range(1, min(max_used + 1, r) + 1):
            if c in sat[v]:
                continue
            colors[v] = c
            touched = [u for u in g.adj[v] if c not in sat[u]]
            for u in touched:
                sat[u].add(c)
            if rec(max(max_used, c)):
                return True
            for u in touched:
                sat[u].discard(c)
            del colors[v]
        return False

    return dict(colors) if rec(0) else None


def chromatic_number_exact(
    g: Graph | CayleyGraph, max_colors: int | None = None
) -> tuple[int | float, Coloring | None]:
    """Exact chromatic number plus one optimal coloring.

    Returns (INFINITE, None) when the graph has a self-loop.  With max_colors
    set, returns (max_colors + 1, None) as a ">max_colors" marker if no
    coloring within the cap exists.
    """
    graph = _as_graph(g)
    if graph.has_self_loop:
        return INFINITE, None
    if graph.n == 0:
        return 0, {}
    lb = max(1, len(_greedy_clique(graph)))
    heur = _dsatur(graph)
    ub = max(heur.values())
    best, witness = ub, heur
    if max_colors is not None and lb > max_colors:
        return max_colors + 1, None
    while best > lb:
        target = best - 1
        if max_colors is not None and target > max_colors:
            target = max_colors
        attempt = _find_coloring(graph, target)
        if attempt is None:
            break
        best, witness = max(attempt.values()) if attempt else 1, attempt
    if max_colors is not None and best > max_colors:
        return max_colors + 1, None
    return best, witness


def chromatic_number_bruteforce(g: Graph | CayleyGraph) -> int | float:
    """Oracle: smallest r admitting a proper coloring, by chronological
    enumeration of color assignments with no heuristics or bounds."""
    graph = _as_graph(g)
    if graph.has_self_loop:
        return INFINITE
    if graph.n == 0:
        return 0
    edges = [(u, v) for u, v in graph.edges() if u != v]
    for r in range(1, graph.n + 1):
        stack = [()]
        while stack:
            partial = stack.pop()
            v = len(partial)
            if v == graph.n:
                return r
            # Symmetry break: vertex v may only open one new color.
            cap = min(r, max(partial, default=0) + 1)
            for c in range(cap, 0, -1):
                if all(partial[u] != c for u in graph.adj[v] if u < v):
                    stack.append(partial + (c,))
    return graph.n


def components_classify(g: Graph | CayleyGraph) -> list[tuple[str, tuple[int, ...]]]:
    """Classify each connected component: singleton, single-edge, path, or other."""
    graph = _as_graph(g)
    seen = [False] * graph.n
    out: list[tuple[str, tuple[int, ...]]] = []
    for start in range(graph.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for u in graph.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comp.sort()
        out.append((_classify_component(graph, comp), tuple(comp)))
    return out


def _classify_component(graph: Graph, comp: list[int]) -> str:
    if any(v in graph.self_loops for v in comp):
        return "other(self-loop)"
    n_edges = sum(len(graph.adj[v]) for v in comp) // 2
    max_deg = max(len(graph.adj[v]) for v in comp)
    if len(comp) == 1:
        return "singleton"
    if len(comp) == 2 and n_edges == 1:
        return "single-edge"
    if max_deg <= 2:
        if n_edges == len(comp) - 1:
            return "path"
        return "other(cycle)"
    return "other(branching)"


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 1..N and a set of edges, each a set of vertex indices."""

    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        for e in self.edges:
            if not e or not all(1 <= v <= self.n for v in e):
                raise ValueError(f"edge {sorted(e)} not inside [1, {self.n}]")

    @classmethod
    def from_edge_lists(cls, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        return cls(n, frozenset(frozenset(e) for e in edges))


def _monochromatic_edge(hg: Hypergraph, color_of: dict[int, int]) -> frozenset[int] | None:
    for e in hg.edges:
        it = iter(e)
        c0 = color_of[next(it)]
        if all(color_of[v] == c0 for v in it):
            return e
    return None


def find_proper_partition(hg: Hypergraph, r: int) -> CellPartition | None:
    """A partition of [1, N] into at most r cells with no monochromatic edge,
    or None.  Deterministic backtracking with new-color symmetry breaking."""
    if any(len(e) == 1 for e in hg.edges):
        return None
    edges = [sorted(e) for e in hg.edges]
    # Edges indexed by their largest vertex: check each edge once complete.
    by_last: dict[int, list[list[int]]] = {}
    for e in edges:
        by_last.setdefault(e[-1], []).append(e)
    colors: dict[int, int] = {}

    def rec(v: int, used: int) -> bool:
        if v > hg.n:
            return True
        for c in range(1, min(used + 1, r) + 1):
            colors[v] = c
            ok = True
            for e in by_last.get(v, ()):
                if all(colors[u] == c for u in e[:-1]):
                    ok = False
                    break
            if ok and rec(v + 1, max(used, c)):
                return True
            del colors[v]
        return False

    if not rec(1, 0):
        return None
    return partition_from_coloring(colors)


def partition_from_coloring(color_of: dict[int, int]) -> CellPartition:
    """Cells ordered by their least vertex."""
    cells: dict[int, set[int]] = {}
    for v, c in color_of.items():
        cells.setdefault(c, set()).add(v)
    ordered = sorted(cells.values(), key=min)
    return tuple(frozenset(c) for c in ordered)


def coloring_of_partition(part: CellPartition) -> dict[int, int]:
    return {v: i + 1 for i, cell in enumerate(part) for v in cell}


def hypergraph_chromatic(hg: Hypergraph) -> int:
    """Exact minimum number of cells such that no edge is monochromatic."""
    if any(len(e) == 1 for e in hg.edges):
        raise ValueError("singleton edge makes the hypergraph uncolorable")
    if not hg.edges:
        return 1
    for r in range(1, hg.n + 1):
        if find_proper_partition(hg, r) is not None:
            return r
    raise AssertionError("a hypergraph with edges of size >= 2 is N-colorable")


def hypergraph_chromatic_bruteforce(hg: Hypergraph) -> int:
    """Oracle: enumerate all color assignments outright."""
    if not hg.edges:
        return 1
    for r in range(1, hg.n + 1):
        for assignment in itertools.product(range(1, r + 1), repeat=hg.n):
            color_of = {v: assignment[v - 1] for v in range(1, hg.n + 1)}
            if _monochromatic_edge(hg, color_of) is None:
                return r
    raise AssertionError("unreachable for edges of size >= 2")


def coloring_to_avoiding_subgroup(
    part: CellPartition, fam: Hypergraph, p: int
) -> Subgroup:
    """Build the subgroup cut out by the cell-sum characters of a proper partition.

    Row j of the annihilator sums the coordinates indexed by cell j.  For
    p-uniform families a proper partition guarantees the subgroup avoids the
    family's indicator vectors; edge sizes must at least be divisible by p.
    """
    verts = sorted(v for cell in part for v in cell)
    if verts != list(range(1, fam.n + 1)):
        raise ValueError("partition cells must exactly cover [1, N]")
    for e in fam.edges:
        if len(e) % p != 0:
            raise ValueError(f"edge {sorted(e)} has size not divisible by p={p}")
    color_of = coloring_of_partition(part)
    bad = _monochromatic_edge(fam, color_of)
    if bad is not None:
        raise ValueError(f"edge {sorted(bad)} is monochromatic under the partition")
    rows = [
        DualVec(p, tuple(1 if v in cell else 0 for v in range(1, fam.n + 1)))
        for cell in part
    ]
    return Subgroup.from_dual_vectors(rows, p=p, n=fam.n)


def characters_to_coloring(xis: Sequence[DualVec], N: int) -> CellPartition:
    """Partition [1, N] by the joint character values on the basis vectors."""
    if not xis:
        raise ValueError("need at least one character")
    p = xis[0].p
    for xi in xis:
        if xi.p != p:
            raise ValueError("characters must share the modulus")
        if xi.n < N:
            raise ValueError(f"character dimension {xi.n} smaller than N={N}")
    cells: dict[tuple[int, ...], set[int]] = {}
    for v in range(1, N + 1):
        key = tuple(xi.coords[v - 1] for xi in xis)
        cells.setdefault(key, set()).add(v)
    ordered = sorted(cells.values(), key=min)
    return tuple(frozenset(c) for c in ordered)


def verify(witness, against) -> tuple[bool, object]:
    """Validate a coloring against a (hyper)graph or a subgroup against a set.

    Returns (True, None) or (False, counterexample).
    """
    if isinstance(witness, dict) and isinstance(against, (Graph, CayleyGraph)):
        graph = _as_graph(against)
        for u, v in graph.edges():
            if witness[u] == witness[v]:
                return False, (u, v)
        return True, None
    if isinstance(witness, tuple) and isinstance(against, Hypergraph):
        color_of = coloring_of_partition(witness)
        if sorted(color_of) != list(range(1, against.n + 1)):
            raise ValueError("partition does not cover the vertex set")
        bad = _monochromatic_edge(against, color_of)
        return (bad is None), (sorted(bad) if bad is not None else None)
    if isinstance(witness, Subgroup) and isinstance(against, VecSet):
        for s in against.elements:
            if witness.contains(s):
                return False, s
        return True, None
    raise ValueError(
        f"cannot verify {type(witness).__name__} against {type(against).__name__}"
    )
