"""Plain-text file formats: vector sets, matrices, hypergraphs, edge lists."""

from __future__ import annotations

import hashlib
import re
from pathlib import Path

from .colorings import Graph, Hypergraph
from .fpgroup import FpMatrix, FpVec
from .setops import VecSet

_HEADER_PN = re.compile(r"#\s*p=(\d+)\s+n=(\d+)\s*$")
_HEADER_N = re.compile(r"#\s*N=(\d+)\s*$")
_HEADER_V = re.compile(r"#\s*vertices=(\d+)\s*$")


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines()[1:] if ln.strip()]


def write_vecset(S: VecSet, path: str | Path) -> None:
    lines = [f"# p={S.p} n={S.n}"]
    lines.extend(" ".join(str(c) for c in v.coords) for v in S.elements)
    Path(path).write_text("\n".join(lines) + "\n")


def read_vecset(path: str | Path) -> VecSet:
    text = Path(path).read_text()
    first = text.splitlines()[0] if text.splitlines() else ""
    m = _HEADER_PN.match(first)
    if not m:
        raise ValueError(f"{path}: missing '# p=<p> n=<n>' header")
    p, n = int(m.group(1)), int(m.group(2))
    vecs = []
    for ln in _data_lines(text):
        coords = tuple(int(tok) for tok in ln.split())
        if len(coords) != n:
            raise ValueError(f"{path}: line {ln!r} has {len(coords)} coordinates, expected {n}")
        vecs.append(FpVec(p, coords))
    return VecSet(p, n, tuple(vecs))


def write_matrix(M: FpMatrix, n: int, path: str | Path) -> None:
    lines = [f"# p={M.p} n={n}"]
    lines.extend(" ".join(str(c) for c in row) for row in M.entries)
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix(path: str | Path) -> FpMatrix:
    text = Path(path).read_text()
    first = text.splitlines()[0] if text.splitlines() else ""
    m = _HEADER_PN.match(first)
    if not m:
        raise ValueError(f"{path}: missing '# p=<p> n=<n>' header")
    p, n = int(m.group(1)), int(m.group(2))
    rows = []
    for ln in _data_lines(text):
        row = tuple(int(tok) for tok in ln.split())
        if len(row) != n:
            raise ValueError(f"{path}: row {ln!r} has {len(row)} entries, expected {n}")
        rows.append(row)
    return FpMatrix(p, tuple(rows))


def write_hypergraph(hg: Hypergraph, path: str | Path) -> None:
    lines = [f"# N={hg.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in sorted(sorted(e) for e in hg.edges))
    Path(path).write_text("\n".join(lines) + "\n")


def read_hypergraph(path: str | Path) -> Hypergraph:
    text = Path(path).read_text()
    first = text.splitlines()[0] if text.splitlines() else ""
    m = _HEADER_N.match(first)
    if not m:
        raise ValueError(f"{path}: missing '# N=<N>' header")
    n = int(m.group(1))
    edges = [[int(tok) for tok in ln.split()] for ln in _data_lines(text)]
    return Hypergraph.from_edge_lists(n, edges)


def write_graph(g: Graph, path: str | Path) -> None:
    lines = [f"# vertices={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    Path(path).write_text("\n".join(lines) + "\n")


def read_graph(path: str | Path) -> Graph:
    text = Path(path).read_text()
    first = text.splitlines()[0] if text.splitlines() else ""
    m = _HEADER_V.match(first)
    if not m:
        raise ValueError(f"{path}: missing '# vertices=<count>' header")
    n = int(m.group(1))
    edges = []
    for ln in _data_lines(text):
        u, v = (int(tok) for tok in ln.split())
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def sha256_of_file(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def digest_of_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
