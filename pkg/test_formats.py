"""Tests for the text, DOT and record formats"""
import io
import json

import pytest

from phylolab.core.errors import FormatError
from phylolab.models.graph import Digraph, Graph
from phylolab.formats.dot import emit_dot
from phylolab.formats.records import RecordWriter, dumps
from phylolab.formats.text import (
    decode, parse_digraph, parse_graph, read_digraph, read_graph, serialize_digraph, serialize_graph,
)
from phylolab.core.config import settings
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.verification import ReportRecord
from phylolab.services.constructions import construct
from phylolab.services.enumeration import enumerate_staircase


def test_parse_digraph_skips_comments():
    d = parse_digraph("# food web\ndag 3\n\na 0 1\n  a 1 2\n")
    assert d == Digraph.from_arcs(3, [(0, 1), (1, 2)])


def test_parse_graph_accepts_either_orientation():
    assert parse_graph("graph 3\ne 2 0\ne 1 2\n") == Graph.from_edges(3, [(0, 2), (1, 2)])


@pytest.mark.parametrize("content, line, column", [
    ("", 1, 1),
    ("graph 3\n", 1, 1),
    ("dag\n", 1, 1),
    ("dag x\n", 1, 5),
    ("dag 3\na 0 5\n", 2, 5),
    ("dag 3\n# c\n\na 0 y\n", 4, 5),
    ("dag 3\ne 0 1\n", 2, 1),
    ("dag 3\na 0 1 2\n", 2, 7),
    ("dag 3\na 1 1\n", 2, 5),
    ("dag 3\na 0 1\na 0 1\n", 3, 1),
    ("dag 2\na 0 1\na 1 0\n", 3, 1),
])
def test_parse_digraph_errors_point_at_the_token(content, line, column):
    with pytest.raises(FormatError) as info:
        parse_digraph(content)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_graph_rejects_repeated_edges():
    with pytest.raises(FormatError) as info:
        parse_graph("graph 3\ne 0 1\ne 1 0\n")
    assert info.value.line == 3
    assert "duplicate" in info.value.detail


def test_serialized_construction_reads_back(tmp_path):
    d = construct("hole3i", 2).digraph
    path = tmp_path / "hole.dag"
    path.write_text(serialize_digraph(d))
    assert read_digraph(path) == d
    assert serialize_graph(Graph.from_edges(2, [(0, 1)])) == "graph 2\ne 0 1\n"


def test_dot_uses_construction_names():
    result = construct("hole3i", 2)
    text = emit_dot(result.digraph, result.name_map, name="hole3i")
    lines = text.splitlines()
    assert lines[0] == "digraph hole3i {"
    assert lines[1] == '  0 [label="u"];'
    assert lines[2] == '  1 [label="v_{0,1}"];'
    assert sum(" -> " in line for line in lines) == 8
    assert lines[-1] == "}"


def test_dot_for_undirected_graphs():
    text = emit_dot(Graph.from_edges(3, [(1, 2)]))
    assert text == 'graph G {\n  0 [label="0"];\n  1 [label="1"];\n  2 [label="2"];\n  1 -- 2;\n}\n'


def test_record_writer_emits_one_line_per_record():
    stream = io.StringIO()
    writer = RecordWriter(stream)
    writer(ReportRecord(record="summary", statement="thm_1_4", params={"i": 2}, verdict="pass"))
    writer.write(ReportRecord(
        record="counterexample", statement="thm_1_4", params={"i": 2}, digest="ab", instance=3, verdict="fail",
    ))
    lines = stream.getvalue().splitlines()
    assert writer.written == 2
    assert "digest" not in json.loads(lines[0])
    assert json.loads(lines[1])["instance"] == 3


def test_dumps_is_deterministic():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_enumerated_digraphs_survive_serialization():
    bounds = DegreeBounds(i=2, j=2)
    for n in range(7):
        for d in enumerate_staircase(n, bounds):
            assert parse_digraph(serialize_digraph(d)) == d


@pytest.mark.parametrize("digits", ["²", "٣", "1²"])
def test_non_ascii_digits_are_not_vertices(digits):
    with pytest.raises(FormatError) as info:
        parse_graph(f"graph 3\ne 0 {digits}\n")
    assert (info.value.line, info.value.column) == (2, 5)


def test_invalid_utf8_points_at_the_byte(tmp_path):
    path = tmp_path / "latin1.dag"
    path.write_bytes(b"dag 3\na 0 1\n# caf\xe9\n")
    with pytest.raises(FormatError) as info:
        read_digraph(path)
    assert (info.value.line, info.value.column) == (3, 6)
    assert "0xe9" in info.value.detail


def test_decode_counts_characters_not_bytes():
    with pytest.raises(FormatError) as info:
        decode(b"graph 2\n# \xc3\xa9\xff")
    assert (info.value.line, info.value.column) == (2, 4)


def test_oversized_header_is_refused_before_allocation():
    with pytest.raises(FormatError) as info:
        parse_digraph("dag 999999999\na 0 1\n")
    assert (info.value.line, info.value.column) == (1, 5)
    assert "exceeds" in info.value.detail


def test_vertex_limit_follows_settings(monkeypatch, tmp_path):
    monkeypatch.setattr(settings, "MAX_VERTICES", 3)
    path = tmp_path / "four.graph"
    path.write_text("graph 4\ne 0 1\n")
    with pytest.raises(FormatError):
        read_graph(path)
    assert parse_graph("graph 3\ne 0 1\n") == Graph.from_edges(3, [(0, 1)])
