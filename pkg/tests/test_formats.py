import pytest
from hypothesis import given

from modwidth.errors import ParseError
from modwidth.formats import FORMATS, emit, emit_graph6, parse, parse_dimacs, parse_edgelist, parse_graph6, sniff
from modwidth.gen import cycle, petersen
from modwidth.graph import Graph

from strategies import graphs


def test_graph6_known_strings():
    assert emit_graph6(cycle(5)) == b"Dhc"
    assert emit_graph6(petersen()) == b"IheA@GUAo"
    assert parse_graph6(b">>graph6<<Dhc\n") == cycle(5)


@pytest.mark.parametrize("n", [0, 1, 62, 63, 100])
def test_graph6_size_encodings(n):
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("fmt", FORMATS)
@given(g=graphs(max_n=10))
def test_roundtrip(fmt, g):
    assert parse(fmt, emit(g, fmt)) == g


def test_edgelist_comments_and_offsets():
    assert parse_edgelist(b"# tri\n3\n0 1\n1 2 # x\n2 0\n") == Graph.complete(3)
    with pytest.raises(ParseError) as err:
        parse_edgelist(b"3\n0 1\n1 9\n")
    assert err.value.offset == 8


def test_dimacs_one_indexed():
    g = parse_dimacs(b"c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n")
    assert g == Graph.complete(3)
    with pytest.raises(ParseError):
        parse_dimacs(b"p edge 3 1\ne 0 1\n")


@pytest.mark.parametrize("data", [b"", b"D\x01c", b"Dh"])
def test_graph6_rejects_garbage(data):
    with pytest.raises(ParseError):
        parse_graph6(data)


def test_sniff():
    assert sniff(b"Dhc") == "graph6"
    assert sniff(b">>graph6<<Dhc") == "graph6"
    assert sniff(b"p edge 1 0") == "dimacs"
    assert sniff(b"3\n0 1") == "edgelist"


def test_unknown_format():
    with pytest.raises(ValueError):
        parse("sparse6", b":")
