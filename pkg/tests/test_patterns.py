import pytest

from polychi import generators as gen
from polychi.graph import Graph, eccentricity, is_tree
from polychi.patterns import (
    PatternSpec,
    embed_params,
    h_tree_size,
    in_F1,
    in_F2,
    in_FT,
    in_L,
    in_M,
    induced_contains,
    is_E_free,
    is_induced_embedding,
    is_paw_free,
    parse_pattern,
    realize,
)

from oracles import induced_bf, tau_bf

GROTZSCH = gen.mycielskian(gen.cycle(5))


def test_fixed_realizations():
    paw = realize(PatternSpec("paw"))
    assert sorted(paw.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2)]
    e = realize(PatternSpec("e_graph"))
    assert is_tree(e) and e.n == 6
    sd = realize(PatternSpec("sub_dart"))
    assert (sd.n, sd.m) == (6, 7)
    # l2 (vertex 1) carries l1, l3, l5, m
    assert sorted(sd.neighbors(1)) == [0, 2, 4, 5]


@pytest.mark.parametrize("s, p", [(3, 2), (2, 3), (1, 4), (4, 1), (2, 0)])
def test_h_tree(s, p):
    h = realize(PatternSpec("h_tree", (s, p)))
    assert h.n == h_tree_size(s, p)
    assert is_tree(h)
    assert eccentricity(h, 0) == p
    if p:
        assert h.degree(0) == s
        internal = [v for v in range(1, h.n) if h.degree(v) > 1]
        assert all(h.degree(v) == s + 1 for v in internal)


def test_h32_has_13_vertices():
    assert realize(PatternSpec("h_tree", (3, 2))).n == 13


def test_h1p_is_path():
    assert realize(PatternSpec("h_tree", (1, 4))) == gen.path(5)


@pytest.mark.parametrize("p", [4, 5, 6, 7])
def test_t1_t2(p):
    t1 = realize(PatternSpec("t1", (p,)))
    t2 = realize(PatternSpec("t2", (p,)))
    assert is_tree(t1) and t1.n == p + 3 and t1.m == p + 2
    assert is_tree(t2) and t2.n == p + 4
    for t in (t1, t2):
        e = embed_params(t)
        host = realize(PatternSpec("h_tree", (e.spread, e.height)))
        phi = induced_contains(host, t)
        assert phi is not None and is_induced_embedding(host, t, phi)


def test_invalid_specs():
    for bad in (("t1", (3,)), ("t2", (2,)), ("h_tree", (0, 2)), ("h_tree", (2, -1)), ("nope", ())):
        with pytest.raises(ValueError):
            PatternSpec(*bad)


def test_parse_pattern():
    assert parse_pattern("t1:4") == PatternSpec("t1", (4,))
    assert parse_pattern("h:3,2") == PatternSpec("h_tree", (3, 2))
    assert parse_pattern("e") == PatternSpec("e_graph")


def test_parse_custom_file(tmp_path):
    f = tmp_path / "tri.edges"
    f.write_text("n 3\n0 1\n1 2\n0 2\n")
    assert realize(parse_pattern(f"custom:@{f}")) == gen.complete(3)


def test_induced_contains_examples():
    paw = realize(PatternSpec("paw"))
    assert induced_contains(paw, paw) == [0, 1, 2, 3]
    assert induced_contains(gen.complete(4), paw) is None
    e = realize(PatternSpec("e_graph"))
    phi = induced_contains(GROTZSCH, e)
    assert phi is not None and is_induced_embedding(GROTZSCH, e, phi)


@pytest.mark.parametrize("tree, s, p", [
    (realize(PatternSpec("broom", (1, 3))), 3, 1),
    (realize(PatternSpec("t1", (4,))), 3, 3),
    (gen.path(5), 2, 2),
])
def test_embed_params(tree, s, p):
    e = embed_params(tree)
    assert (e.spread, e.height) == (s, p)
    assert e.size == h_tree_size(s, p)


def test_embed_params_rejects_non_tree():
    with pytest.raises(ValueError):
        embed_params(gen.cycle(4))


def test_class_predicates():
    assert in_M(GROTZSCH) is True
    assert in_M(realize(PatternSpec("paw"))) is False
    assert in_M(gen.complete_multipartite([2, 2, 2])) is True
    assert in_L(realize(PatternSpec("sub_dart"))) is False
    assert is_paw_free(gen.complete(5)) and not is_E_free(GROTZSCH)


def test_f_classes():
    assert in_F1(gen.cycle(5), 2) is True
    k22 = gen.kdt(2, 2)
    assert in_F2(k22, 2, 2) is False
    assert in_F2(k22, 1, 3) is True  # 2b > n: vacuous
    assert in_F2(gen.cycle(5), 2, 1) is False  # tau_2 < t
    # F1 and the tau_2 clause of F2 exclude each other
    for g in (gen.cycle(5), k22, gen.complete(6)):
        for t in (1, 2, 3):
            assert not (in_F1(g, t) and in_F2(g, t, 1))
    star = realize(PatternSpec("broom", (1, 3)))
    assert in_FT(gen.complete(6), star, 1) is True


def test_f2_universal_reading():
    # K_6: every K_2(3) split has a triangle on each side, which holds K_2(1) but not K_2(2)
    k6 = gen.complete(6)
    assert in_F2(k6, 1, 3) is True
    assert in_F2(k6, 2, 3) is False


CATALOG = [PatternSpec(k) for k in ("paw", "e_graph", "sub_dart", "dart", "cross", "h_letter")] + [
    PatternSpec("path", (4,)), PatternSpec("broom", (2, 3)), PatternSpec("h_tree", (2, 2)),
    PatternSpec("h_tree", (3, 1)), PatternSpec("t1", (4,)), PatternSpec("t2", (4,)),
]


def test_detector_matches_oracle_n6(corpus6):
    for spec in CATALOG:
        h = realize(spec)
        for g in corpus6:
            assert (induced_contains(g, h) is not None) == induced_bf(g, h), (spec, g)


def test_free_is_hereditary_spot_check(corpus6):
    paw = realize(PatternSpec("paw"))
    from polychi.graph import induced_subgraph
    for g in corpus6[::7]:
        if g.n and induced_contains(g, paw) is None:
            for v in range(g.n):
                sub = induced_subgraph(g, [u for u in range(g.n) if u != v])
                assert induced_contains(sub, paw) is None
