from collections import Counter

import pytest

from polychi import generators as gen
from polychi.corpus import CorpusSpec, canonical_form, exhaustive, named_graph, parse_corpus
from polychi.graph import Graph

# unlabeled graphs on n vertices
KNOWN = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_exhaustive_counts(corpus7):
    counts = Counter(g.n for g in corpus7)
    assert dict(counts) == KNOWN


def test_labeled_enumeration_collapses_to_classes():
    labeled = list(exhaustive(4, n_min=4, unique=False))
    assert len(labeled) == 2 ** 6
    assert len({canonical_form(g) for g in labeled}) == KNOWN[4]


def test_canonical_form_is_invariant():
    g = gen.mycielskian(gen.cycle(5))
    perm = [3, 7, 1, 10, 0, 9, 2, 8, 4, 6, 5]
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_form(g) == canonical_form(h)
    assert canonical_form(gen.cycle(6)) != canonical_form(gen.disjoint_union(gen.cycle(3), gen.cycle(3)))


def test_exhaustive_cap():
    with pytest.raises(ValueError):
        list(exhaustive(9))
    with pytest.raises(ValueError):
        CorpusSpec("exhaustive", n=9)


def test_random_needs_seed():
    with pytest.raises(ValueError):
        CorpusSpec("random", n=5, count=3)
    a = list(parse_corpus("random:8,0.5,4,11").graphs())
    assert a == list(parse_corpus("random:8,0.5,4,11").graphs())


def test_named_and_filters():
    c = parse_corpus("named:mycielski:cycle:5;paw;kdt:2,3", filters=["paw_free"])
    graphs = list(c.graphs())
    assert [g.n for g in graphs] == [11, 6]
    assert named_graph("grotzsch") == gen.mycielskian(gen.cycle(5))


def test_file_corpus(tmp_path):
    f = tmp_path / "c.g6"
    f.write_text("Dhc\n@\n")
    assert [g.n for g in parse_corpus(f"file:{f}").graphs()] == [5, 1]
