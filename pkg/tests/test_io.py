import networkx as nx
import pytest

from polychi import generators as gen
from polychi.graph import Graph
from polychi.io import Graph6Error, parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6

from oracles import nx_graph


def test_parse_by_hand():
    # n = 'D' - 63 = 5; '?' = 000000, '{' = 111100 -> bits 6..9 set: (0,4), (1,4), (2,4), (3,4)
    g = parse_graph6("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_single_vertex():
    assert parse_graph6("@") == Graph(1, (0,))
    assert serialize_graph6(Graph(1, (0,))) == "@"


def test_empty_input():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("")
    assert err.value.offset == 0


def test_truncated_and_bad_chars():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("D?")
    assert "truncated" in str(err.value)
    with pytest.raises(Graph6Error) as err:
        parse_graph6("D? ")
    assert err.value.offset == 2
    with pytest.raises(Graph6Error):
        parse_graph6("~?")


def test_header_accepted():
    assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")


def test_c5_bits():
    code = serialize_graph6(gen.cycle(5))
    assert code == "Dhc"
    assert nx.to_graph6_bytes(nx_graph(gen.cycle(5)), header=False).strip() == code.encode()
    assert parse_graph6(code) == gen.cycle(5)


@pytest.mark.parametrize("n", [0, 1, 2, 62, 63, 64, 100])
def test_long_form_matches_networkx(n):
    g = gen.gnp(n, 0.3, seed=n)
    code = serialize_graph6(g)
    assert code.encode() == nx.to_graph6_bytes(nx_graph(g), header=False).strip()
    assert parse_graph6(code) == g


def test_round_trip_corpus(corpus7):
    for g in corpus7:
        code = serialize_graph6(g)
        assert parse_graph6(code) == g
        assert serialize_graph6(parse_graph6(code)) == code


def test_edge_list_round_trip():
    g = gen.mycielskian(gen.cycle(5))
    assert parse_edge_list(serialize_edge_list(g)) == g
    with pytest.raises(ValueError):
        parse_edge_list("3\n0 1\n")
