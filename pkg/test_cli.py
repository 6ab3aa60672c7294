"""End-to-end tests for the phylolab command line"""
import json

import pytest

from conftest import cycle_graph
from phylolab.cli.main import main
from phylolab.formats.text import parse_digraph, serialize_digraph, serialize_graph
from phylolab.models.graph import Graph
from phylolab.services.constructions import construct
from phylolab.services.phylogeny import phylogeny_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return str(path)
    return _write


def test_banner_goes_to_stderr(capsys):
    assert main(["statements"]) == 0
    captured = capsys.readouterr()
    assert captured.err.startswith("phylolab 1.0.0")
    assert "thm_1_4" in captured.out


def test_construct_dot(capsys):
    assert main(["--quiet", "construct", "hole3i", "--param", "2", "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("[label=") == 7
    assert out.count(" -> ") == 8
    assert '[label="v_{0,1}"]' in out


def test_construct_text_reads_back(capsys):
    assert main(["--quiet", "construct", "clique_22", "--validate"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# clique_22")
    assert "# claim omega(P(D)) = 4" in out
    assert parse_digraph(out) == construct("clique_22").digraph


def test_construct_rejects_bad_parameters(capsys):
    assert main(["--quiet", "construct", "hole3i", "--param", "1"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_build_phylogeny_graph(write, capsys):
    path = write("v.dag", "dag 3\na 0 2\na 1 2\n")
    assert main(["--quiet", "build", path]) == 0
    assert capsys.readouterr().out == "graph 3\ne 0 1\ne 0 2\ne 1 2\n"
    assert main(["--quiet", "build", "--competition", path]) == 0
    assert capsys.readouterr().out == "graph 3\ne 0 1\n"


def test_check_chordal_phylogeny_graph(write, capsys):
    pg = phylogeny_graph(construct("hole3i", 3).digraph)
    assert main(["--quiet", "check", write("p.graph", serialize_graph(pg))]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "chordal"
    assert len(lines[1].split()) == pg.n + 1


def test_check_reports_a_hole(write, capsys):
    assert main(["--quiet", "check", write("c5.graph", serialize_graph(cycle_graph(5)))]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "non-chordal"
    assert sorted(map(int, out[1].split()[1:])) == [0, 1, 2, 3, 4]


def test_holes_lists_every_hole(write, capsys):
    assert main(["--quiet", "holes", write("c6.graph", serialize_graph(cycle_graph(6)))]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "# 1 hole(s)"


def test_forbidden_k5(write, capsys):
    path = write("k5.graph", serialize_graph(Graph.complete(5)))
    assert main(["--quiet", "forbidden", path, "--i", "2", "--j", "2"]) == 1
    assert "violation K_5 0 1 2 3 4" in capsys.readouterr().out


def test_forbidden_outside_its_scope(write, capsys):
    path = write("k2.graph", "graph 2\ne 0 1\n")
    assert main(["--quiet", "forbidden", path, "--i", "1", "--j", "3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_file(write, capsys):
    path = write("bad.dag", "dag 3\na 0 7\n")
    assert main(["--quiet", "build", path]) == 2
    assert capsys.readouterr().err.strip() == f"error: {path}:2:5: vertex 7 outside 0..2"


def test_invalid_utf8_file(tmp_path, capsys):
    path = tmp_path / "latin1.dag"
    path.write_bytes(b"dag 3\na 0 1\n# caf\xe9\n")
    assert main(["--quiet", "build", str(path)]) == 2
    assert capsys.readouterr().err.startswith(f"error: {path}:3:6: ")


def test_non_ascii_digit_vertex(write, capsys):
    path = write("sup.graph", "graph 3\ne 0 \u00b2\n")
    assert main(["--quiet", "check", path]) == 2
    assert capsys.readouterr().err.startswith(f"error: {path}:2:5: ")


def test_oversized_header(write, capsys):
    path = write("huge.dag", "dag 999999999\n")
    assert main(["--quiet", "build", path]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_cyclic_input(write, capsys):
    path = write("cyc.dag", "dag 3\na 0 1\na 1 2\na 2 0\n")
    assert main(["--quiet", "build", path]) == 2
    assert "not acyclic" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert main(["--quiet", "check", str(tmp_path / "nowhere.graph")]) == 2


def test_analyze_hole(write, capsys):
    result = construct("hole3i", 2)
    hole = ",".join(map(str, result.claimed[1].vertices))
    path = write("h.dag", serialize_digraph(result.digraph))
    assert main(["--quiet", "analyze", path, "--hole", hole]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0])["bounds"] == "(2,2)"
    statements = [json.loads(line)["statement"] for line in lines[1:]]
    assert "lem_2_1" in statements


def test_analyze_rejects_zero_bounds(write, capsys):
    result = construct("hole3i", 2)
    hole = ",".join(map(str, result.claimed[1].vertices))
    path = write("h.dag", serialize_digraph(result.digraph))
    assert main(["--quiet", "analyze", path, "--hole", hole, "--i", "0"]) == 2
    assert capsys.readouterr().out == ""
    assert main(["--quiet", "analyze", path, "--hole", hole, "--j", "0"]) == 2


def test_enumerate_counts(capsys):
    assert main(["--quiet", "enumerate", "--n", "3", "--i", "1", "--j", "1"]) == 0
    assert capsys.readouterr().out == "count 5\n"


def test_enumerate_cap(capsys):
    assert main(["--quiet", "enumerate", "--n", "9", "--i", "2", "--j", "2"]) == 2


def test_verify_streams_a_summary(capsys):
    assert main(["--quiet", "verify", "prop_3_2", "--i", "2", "--j", "2", "--n", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    summary = json.loads(lines[-1])
    assert summary["record"] == "summary"
    assert summary["verdict"] == "pass"
    assert summary["witness"]["construction"]["holds"] is True


def test_verify_unknown_statement(capsys):
    assert main(["--quiet", "verify", "nope", "--i", "2", "--j", "2", "--n", "3"]) == 2


def test_verify_invalid_parameters(capsys):
    assert main(["--quiet", "verify", "prop_3_1", "--i", "0", "--j", "2", "--n", "3"]) == 2


def test_realize(write, capsys):
    path = write("claw.graph", "graph 4\ne 0 1\ne 0 2\ne 0 3\n")
    assert main(["--quiet", "realize", path, "--i", "1", "--j", "2"]) == 0
    witness = parse_digraph(capsys.readouterr().out)
    assert phylogeny_graph(witness) == Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert main(["--quiet", "realize", path, "--i", "1", "--j", "1"]) == 0
    assert capsys.readouterr().out == "none\n"
