import logging

import networkx as nx
import pytest
from hypothesis import given

from hzcolor.coloring import PartialColoring
from hzcolor.errors import DuplicateEdge, ParseError, SelfLoop
from hzcolor.fixtures import FIXTURES, fixture, fixture_filename
from hzcolor.graph import Graph
from hzcolor.io import (
    format_coloring,
    format_edge_list,
    parse_coloring,
    parse_edge_list,
    parse_graph6,
    parse_graph6_stream,
    to_graph6,
)
from hzcolor.solver import vizing_color
from oracles import to_nx
from strategies import colorings, graphs


def test_edge_list_triangle():
    g = parse_edge_list("3 3\n0 1\n1 2\n0 2")
    assert g.edge_list == ((0, 1), (0, 2), (1, 2))


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# header\n3 2  # n m\n\n0 1\n1 2 # tail\n")
    assert g.m == 2


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("2 1\n0 0", SelfLoop, 2),
        ("2 2\n0 1\n0 1", DuplicateEdge, 3),
        ("2 2\n0 1\n1 0", DuplicateEdge, 3),
        ("2 1\n0 2", ParseError, 2),
        ("3 2\n0 1", ParseError, None),
        ("3\n0 1", ParseError, 1),
        ("3 1\n0 x", ParseError, 2),
        ("", ParseError, None),
    ],
)
def test_edge_list_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    if line is not None:
        assert info.value.line == line


def test_graph6_hand_decoded_path():
    # 4 vertices -> 'C'; bits for 01,02,12,03,13,23 = 101001 -> 41 + 63 = 'h'
    g = parse_graph6("Ch")
    assert g.n == 4 and g.edge_list == ((0, 1), (1, 2), (2, 3))
    assert nx.utils.graphs_equal(to_nx(g), nx.from_graph6_bytes(b"Ch"))


def test_graph6_five_vertex_star():
    g = parse_graph6("D?{")
    assert g.edge_list == ((0, 4), (1, 4), (2, 4), (3, 4))
    assert nx.utils.graphs_equal(to_nx(g), nx.from_graph6_bytes(b"D?{"))


def test_graph6_header_and_large_n():
    assert parse_graph6(">>graph6<<Ch").m == 3
    g = Graph.from_edges(70, [(0, 69), (5, 6)])
    text = to_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
    assert nx.utils.graphs_equal(to_nx(g), nx.from_graph6_bytes(text.encode()))


@pytest.mark.parametrize("line", ["D?", "D?{?", "C\x7f", "Ch h"])
def test_graph6_malformed_lines(line):
    with pytest.raises(ParseError):
        parse_graph6(line, lineno=7)


def test_graph6_stream_skips_empty_lines_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        gs = list(parse_graph6_stream(["Ch", "", "D?{"]))
    assert len(gs) == 2
    assert "empty" in caplog.text


def test_graph6_stream_reports_line_number():
    with pytest.raises(ParseError) as info:
        list(parse_graph6_stream(["Ch", "D?"]))
    assert info.value.line == 2


@given(graphs(max_n=12, max_edges=30))
def test_graph6_round_trip_and_matches_networkx(g):
    text = to_graph6(g)
    assert parse_graph6(text) == g
    assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@given(graphs(max_n=12, max_edges=30))
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(colorings())
def test_coloring_file_round_trip(c):
    text = format_coloring(c)
    back = parse_coloring(text, c.graph, c.k)
    assert back == c
    back.check()


def test_coloring_file_errors():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ParseError):
        parse_coloring("0 1 1\n", g, 2)
    with pytest.raises(ParseError):
        parse_coloring("0 1 -\n1 2 -\n", g, 2)
    with pytest.raises(ParseError):
        parse_coloring("0 1 1\n0 2 2\n", g, 2)
    with pytest.raises(ParseError):
        parse_coloring("0 1 3\n1 2 2\n", g, 2)
    c = parse_coloring("0 1 -\n1 2 2\n", g, 2)
    assert c.uncolored_edge == (0, 1)


def test_vizing_output_file_revalidates():
    g = fixture("P*")
    c = vizing_color(g)
    parse_coloring(format_coloring(c), g).check()


@pytest.mark.parametrize("name", list(FIXTURES))
def test_shipped_fixture_files_match_constructors(repo, name):
    text = (repo / "fixtures" / fixture_filename(name)).read_text()
    assert parse_edge_list(text) == fixture(name)


def test_p_star_file_shape(repo):
    g = parse_edge_list((repo / "fixtures" / "Pstar.edges").read_text())
    assert (g.n, g.m) == (9, 12)
    assert nx.is_isomorphic(to_nx(g), nx.subgraph(nx.petersen_graph(), range(9)))


def test_petersen_fixture_is_petersen():
    assert nx.is_isomorphic(to_nx(fixture("Petersen")), nx.petersen_graph())


def test_partial_coloring_from_file_keeps_palette():
    g = Graph.from_edges(2, [(0, 1)])
    assert parse_coloring("0 1 1\n", g, 3) == PartialColoring(g, 3, [1])
