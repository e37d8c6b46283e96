import json

import pytest

from fprec.cli import main
from fprec.colorings import Graph, Hypergraph
from fprec.families import ap3_hypergraph, weight_d_set
from fprec.fileio import (
    read_graph,
    read_hypergraph,
    read_matrix,
    read_vecset,
    write_graph,
    write_hypergraph,
    write_matrix,
    write_vecset,
)
from fprec.fpgroup import FpMatrix


class TestFileFormats:
    def test_vecset_roundtrip(self, tmp_path):
        S = weight_d_set(3, 4, 2)
        path = tmp_path / "s.txt"
        write_vecset(S, path)
        assert path.read_text().splitlines()[0] == "# p=3 n=4"
        assert read_vecset(path) == S

    def test_matrix_roundtrip(self, tmp_path):
        M = FpMatrix(2, ((1, 0, 1), (0, 1, 1)))
        path = tmp_path / "m.txt"
        write_matrix(M, 3, path)
        assert read_matrix(path) == M

    def test_hypergraph_roundtrip(self, tmp_path):
        hg = ap3_hypergraph(6)
        path = tmp_path / "h.txt"
        write_hypergraph(hg, path)
        assert path.read_text().splitlines()[0] == "# N=6"
        assert read_hypergraph(path) == hg

    def test_graph_roundtrip(self, tmp_path):
        g = Graph.from_edges(4, [(0, 1), (2, 3), (1, 1)])
        path = tmp_path / "g.txt"
        write_graph(g, path)
        assert read_graph(path) == g

    def test_missing_header(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1 0 1\n")
        with pytest.raises(ValueError):
            read_vecset(path)


@pytest.fixture
def e1_file(tmp_path):
    path = tmp_path / "e1.txt"
    write_vecset(weight_d_set(2, 4, 1), path)
    return str(path)


class TestCli:
    def test_deficiency(self, e1_file, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["deficiency", "--in", e1_file, "--k-max", "2", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["deficient_at"] == 1
        assert doc["witness_annihilator"] == [[1, 1, 1, 1]]

    def test_chi_cayley_mode(self, tmp_path, capsys):
        v = tmp_path / "v.txt"
        s = tmp_path / "s.txt"
        write_vecset(weight_d_set(2, 2, 1), v)  # just e1, e2
        from fprec.setops import VecSet

        write_vecset(VecSet.full(2, 2), v)
        write_vecset(weight_d_set(2, 2, 1), s)
        assert main(["chi", "--vertices", str(v), "--conn", str(s)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["chi"] == 2

    def test_cayley_then_chi_graph_mode(self, tmp_path, capsys):
        from fprec.setops import VecSet

        v = tmp_path / "v.txt"
        s = tmp_path / "s.txt"
        g = tmp_path / "g.txt"
        write_vecset(VecSet.full(2, 2), v)
        write_vecset(weight_d_set(2, 2, 1), s)
        assert main(["cayley", "--vertices", str(v), "--conn", str(s), "--out", str(g)]) == 0
        assert g.read_text().startswith("# vertices=4")
        assert main(["chi", "--graph", str(g)]) == 0
        assert json.loads(capsys.readouterr().out)["chi"] == 2

    def test_hypergraph_chi(self, tmp_path, capsys):
        path = tmp_path / "h.txt"
        write_hypergraph(ap3_hypergraph(8), path)
        assert main(["hypergraph-chi", "--in", str(path)]) == 0
        assert json.loads(capsys.readouterr().out)["chi"] == 2

    def test_bridge(self, tmp_path, capsys):
        path = tmp_path / "h.txt"
        write_hypergraph(Hypergraph.from_edge_lists(3, [{1, 2}, {2, 3}]), path)
        assert main(["bridge", "--in", str(path), "--p", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True

    def test_exp_determinism(self, tmp_path, capsys):
        args = ["exp", "poincare", "--p", "2", "--n", "4", "--k", "1",
                "--trials", "10", "--seed", "3"]
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_tsv_format(self, e1_file, capsys):
        assert main(["deficiency", "--in", e1_file, "--k-max", "1", "--format", "tsv"]) == 0
        out = capsys.readouterr().out
        assert "deficient_at\t1" in out

    def test_bad_input_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("no header\n")
        assert main(["deficiency", "--in", str(path), "--k-max", "1"]) == 2

    def test_resource_guard_exit_3(self, capsys):
        # poincare guard: p^n above 2^14
        assert main(["exp", "poincare", "--p", "2", "--n", "20", "--k", "1",
                     "--trials", "1"]) == 3

    def test_exp_s_square(self, tmp_path, capsys):
        out = tmp_path / "sq.json"
        assert main(["exp", "s-square", "--w", "3", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["results"]["chi"] == 2
        assert doc["verdicts"]["components_in_trichotomy"] is True
