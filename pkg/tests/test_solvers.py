import pytest

from polychi import generators as gen
from polychi.graph import Graph, degeneracy, induced_subgraph, is_proper_coloring
from polychi.patterns import PatternSpec, realize
from polychi.solvers import (
    SolverLimits,
    Unknown,
    chromatic_number,
    clique_number,
    contains_Kdt,
    iter_multipartite,
    solve_clique,
    solve_coloring,
    tau_d,
    validate_multipartite,
)

from oracles import chi_bf, omega_bf, tau_bf

GROTZSCH = gen.mycielskian(gen.cycle(5))


@pytest.mark.parametrize("g, chi", [
    (gen.cycle(5), 3), (gen.kdt(3, 2), 3), (gen.kdt(4, 1), 4), (GROTZSCH, 4), (Graph(0, ()), 0),
    (gen.mycielskian(GROTZSCH), 5),
])
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi
    res = solve_coloring(g)
    assert is_proper_coloring(g, res.colors) and (g.n == 0 or max(res.colors) + 1 == chi)


def test_grotzsch_not_3_colorable_by_brute_force():
    assert chi_bf(GROTZSCH) == 4


@pytest.mark.parametrize("g, omega", [
    (realize(PatternSpec("paw")), 3), (GROTZSCH, 2), (gen.kdt(2, 3), 2), (gen.complete(6), 6),
])
def test_clique_number(g, omega):
    assert clique_number(g) == omega
    clique = solve_clique(g)
    assert all(g.adjacent(u, v) for u in clique for v in clique if u != v)


def test_budget_gives_unknown_with_bounds():
    g = gen.mycielskian(GROTZSCH)
    res = chromatic_number(g, SolverLimits(node_budget=5))
    assert isinstance(res, Unknown)
    assert res.lower is None or res.lower <= 5 <= res.upper
    with pytest.raises(TypeError):
        bool(res)


def test_tau_examples():
    assert tau_d(gen.cycle(5), 1)[0] == 5
    assert tau_d(gen.cycle(5), 2)[0] == 1
    assert tau_d(gen.complete(4), 2)[0] == 2
    assert tau_d(gen.empty(4), 2) == (0, None)
    assert tau_d(gen.complete(9), 3)[0] == 3


def test_contains_kdt_examples():
    w = contains_Kdt(gen.kdt(2, 3), 2, 3)
    assert sorted(w.parts) == [(0, 1, 2), (3, 4, 5)]
    assert contains_Kdt(gen.cycle(5), 2, 2) is None
    w = contains_Kdt(gen.complete(9), 3, 3)
    assert validate_multipartite(gen.complete(9), w, 3, 3)


def test_solvers_match_oracles_n6(corpus6):
    for g in corpus6:
        assert chromatic_number(g) == chi_bf(g)
        assert clique_number(g) == omega_bf(g)
        for d in (1, 2, 3):
            t, w = tau_d(g, d)
            assert t == tau_bf(g, d)
            if t:
                assert validate_multipartite(g, w, d, t)


def test_invariants_n6(corpus6):
    for g in corpus6:
        if g.n == 0:
            continue
        chi, omega = chromatic_number(g), clique_number(g)
        assert omega <= chi <= degeneracy(g)[0] + 1
        taus = [tau_d(g, d)[0] for d in (1, 2, 3)]
        assert taus == sorted(taus, reverse=True)
        for d in (2, 3):
            t = taus[d - 1]
            if t:
                assert omega >= d
            # No K_d(t+1) => omega <= d(t+1) - 1
            assert omega <= d * (t + 1) - 1
        sub = induced_subgraph(g, range(g.n - 1))
        assert tau_d(sub, 2)[0] <= taus[1]


def test_iter_multipartite_counts_each_once():
    # K_4 has 3 ways to split into two pairs
    assert len(list(iter_multipartite(gen.complete(4), 2, 2))) == 3
    assert len(list(iter_multipartite(gen.kdt(2, 2), 2, 2))) == 1
