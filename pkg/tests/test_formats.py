from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from kindep.formats import (
    FormatError,
    edgelist_decode,
    edgelist_encode,
    graph6_decode,
    graph6_encode,
    read_graph6_lines,
)
from kindep.graph import NULL_GRAPH, complete_graph, empty_graph, path_graph

from conftest import graphs, nx_graph


def test_five_isolated_vertices():
    # Five vertices carry ten bits, so two data characters are needed.
    assert graph6_decode("D??") == empty_graph(5)
    assert graph6_encode(empty_graph(5)) == "D??"


def test_short_string_rejected_like_networkx():
    with pytest.raises(FormatError):
        graph6_decode("D?")
    with pytest.raises(nx.NetworkXError):
        nx.from_graph6_bytes(b"D?")


def test_known_strings():
    assert graph6_encode(complete_graph(7)) == "F~~~w"
    assert graph6_decode(">>graph6<<F~~~w") == complete_graph(7)
    assert graph6_encode(path_graph(4), header=True).startswith(">>graph6<<")


@pytest.mark.parametrize("bad", ["", "?", "D?!", "D??x", "~??", "Bx"])
def test_malformed(bad):
    with pytest.raises(FormatError):
        graph6_decode(bad)


def test_null_graph_has_no_encoding():
    with pytest.raises(ValueError):
        graph6_encode(NULL_GRAPH)


@given(graphs(max_n=20))
def test_roundtrip_and_networkx_agreement(g):
    s = graph6_encode(g)
    assert graph6_decode(s) == g
    assert nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip() == s
    h = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()


def test_roundtrip_max_order():
    g = path_graph(62)
    assert graph6_decode(graph6_encode(g)) == g


def test_line_numbers_in_file_errors():
    with pytest.raises(FormatError) as info:
        list(read_graph6_lines(["Bw", "", "Cx!"]))
    assert info.value.line == 3


def test_edgelist_roundtrip():
    g = path_graph(5)
    assert edgelist_decode(edgelist_encode(g)) == g
    text = "# comment\n3 2\n0 1\n\n1 2\n"
    assert edgelist_decode(text) == path_graph(3)


@pytest.mark.parametrize("text, line", [
    ("3 2\n0 1\n", 1),
    ("3 1\n0 x\n", 2),
    ("3\n", 1),
    ("3 1\n0 1 2\n", 2),
])
def test_edgelist_errors(text, line):
    with pytest.raises(FormatError) as info:
        edgelist_decode(text)
    assert info.value.line == line


def test_edgelist_semantic_errors():
    with pytest.raises(FormatError):
        edgelist_decode("3 1\n1 1\n")
    with pytest.raises(FormatError):
        edgelist_decode("")
