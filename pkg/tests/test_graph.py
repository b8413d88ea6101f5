import pytest
from hypothesis import given, settings, strategies as st

from polychi import generators as gen
from polychi.graph import (
    Graph,
    degeneracy,
    greedy_coloring,
    induced_subgraph,
    is_connected,
    is_proper_coloring,
    vertex_connectivity,
)
from polychi.patterns import PatternSpec, realize

from oracles import chi_bf, kappa_nx


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


@pytest.mark.parametrize("g, s, expected", [
    (gen.complete(4), [0, 2, 3], gen.complete(3)),
    (gen.cycle(5), [1, 2, 3], gen.path(3)),
    (realize(PatternSpec("paw")), [0, 1, 2], gen.complete(3)),
])
def test_induced_subgraph(g, s, expected):
    assert induced_subgraph(g, s) == expected


def test_induced_subgraph_out_of_range():
    with pytest.raises(ValueError):
        induced_subgraph(gen.path(3), [0, 3])


@given(graphs())
def test_induced_subgraph_full_set_is_identity(g):
    assert induced_subgraph(g, range(g.n)) == g


@pytest.mark.parametrize("g, kappa", [
    (gen.complete(3), 2), (gen.path(4), 1), (gen.cycle(5), 2),
    (gen.complete(1), 0), (Graph(0, ()), 0), (gen.empty(3), 0), (gen.complete(6), 5),
])
def test_vertex_connectivity_examples(g, kappa):
    assert vertex_connectivity(g) == kappa


def test_vertex_connectivity_matches_networkx(corpus6):
    for g in corpus6:
        k = vertex_connectivity(g)
        assert k == kappa_nx(g), g
        if g.n:
            assert k <= min(g.degree(v) for v in range(g.n))


def test_vertex_connectivity_grotzsch():
    assert vertex_connectivity(gen.mycielskian(gen.cycle(5))) == 3


@pytest.mark.parametrize("g, d", [
    (gen.path(2), 1), (realize(PatternSpec("h_tree", (3, 2))), 1), (gen.cycle(5), 2),
    (gen.complete(5), 4), (gen.complete(1), 0),
])
def test_degeneracy_examples(g, d):
    assert degeneracy(g)[0] == d


def test_degeneracy_of_null_graph_raises():
    with pytest.raises(ValueError):
        degeneracy(Graph(0, ()))


def test_greedy_along_reverse_degeneracy_order(corpus6):
    for g in corpus6:
        if g.n == 0 or g.n > 6:
            continue
        d, order = degeneracy(g)
        assert sorted(order) == list(range(g.n))
        colors = greedy_coloring(g, order[::-1])
        assert is_proper_coloring(g, colors)
        assert chi_bf(g) <= max(colors) + 1 <= d + 1


@settings(max_examples=60)
@given(graphs())
def test_connectivity_flags(g):
    k = vertex_connectivity(g)
    if not is_connected(g):
        assert k == 0
