"""Forbidden-pattern catalog, induced subgraph search and the class predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph, bits, eccentricity, is_tree, popcount
from .io import parse_edge_list, parse_graph6
from .solvers import (
    Budget,
    BudgetExceeded,
    SolverLimits,
    Unknown,
    contains_Kdt,
    iter_multipartite,
)

KINDS = (
    "paw", "e_graph", "sub_dart", "dart", "cross", "h_letter",
    "path", "broom", "h_tree", "t1", "t2", "custom",
)

_ALIASES = {"e": "e_graph", "E": "e_graph", "subdart": "sub_dart", "sub-dart": "sub_dart",
            "h": "h_tree", "H": "h_letter", "letter_h": "h_letter"}

_FIXED = {
    "paw": (4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    # a1..a6 -> 0..5: spine a1-a2-a3 with one pendant at each spine vertex
    "e_graph": (6, [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]),
    # l1, l2, l3, l4, l5, m -> 0..5
    "sub_dart": (6, [(3, 5), (5, 1), (1, 2), (0, 1), (4, 1), (0, 3), (4, 3)]),
    # K4 minus the edge 2-3, pendant 4 on vertex 0
    "dart": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
    # K_{1,4} centred at 0 with edge 0-4 subdivided by 5
    "cross": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]),
    # adjacent centres 0, 1, each with two leaves
    "h_letter": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
}


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    params: tuple[int, ...] = ()
    custom: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        p = self.params
        arity = {"path": 1, "broom": 2, "h_tree": 2, "t1": 1, "t2": 1}.get(self.kind, 0)
        if len(p) != arity:
            raise ValueError(f"{self.kind} takes {arity} parameter(s), got {len(p)}")
        if self.kind in ("t1", "t2") and p[0] < 4:
            raise ValueError(f"{self.kind}(p) requires p >= 4")
        if self.kind == "h_tree" and (p[0] < 1 or p[1] < 0):
            raise ValueError("h_tree(s, p) requires s >= 1 and p >= 0")
        if self.kind == "path" and p[0] < 1:
            raise ValueError("path(k) requires k >= 1")
        if self.kind == "broom" and (p[0] < 1 or p[1] < 0):
            raise ValueError("broom(handle, leaves) requires handle >= 1, leaves >= 0")
        if self.kind == "custom" and self.custom is None:
            raise ValueError("custom pattern needs a graph")

    def __str__(self):
        if self.kind == "custom":
            return "custom"
        return self.kind + (":" + ",".join(map(str, self.params)) if self.params else "")


def parse_pattern(text: str) -> PatternSpec:
    """Parse CLI pattern strings such as ``paw``, ``t1:4``, ``h:3,2``, ``custom:@file.edges``."""
    name, _, arg = text.partition(":")
    kind = _ALIASES.get(name, name)
    if kind == "custom":
        if arg.startswith("@"):
            body = Path(arg[1:]).read_text()
            g = parse_edge_list(body) if body.lstrip().startswith("n ") else parse_graph6(body.splitlines()[0])
        else:
            g = parse_graph6(arg)
        return PatternSpec("custom", (), g)
    params = tuple(int(x) for x in arg.split(",")) if arg else ()
    return PatternSpec(kind, params)


def h_tree_size(s: int, p: int) -> int:
    return sum(s ** i for i in range(p + 1))


def realize(spec: PatternSpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind in _FIXED:
        n, edges = _FIXED[kind]
        return Graph.from_edges(n, edges)
    if kind == "custom":
        return spec.custom
    if kind == "path":
        k = p[0]
        return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
    if kind == "broom":
        handle, leaves = p
        edges = [(i, i + 1) for i in range(handle - 1)]
        edges += [(handle - 1, handle + j) for j in range(leaves)]
        return Graph.from_edges(handle + leaves, edges)
    if kind == "h_tree":
        s, height = p
        edges = []
        level = [0]
        nxt_id = 1
        for _ in range(height):
            new_level = []
            for v in level:
                for _ in range(s):
                    edges.append((v, nxt_id))
                    new_level.append(nxt_id)
                    nxt_id += 1
            level = new_level
        return Graph.from_edges(nxt_id, edges)
    k = p[0]
    # path a_1..a_p = 0..p-1; a_p is the attachment vertex
    edges = [(i, i + 1) for i in range(k - 1)]
    a = k - 1
    if kind == "t1":
        # y = p, x = p+1, z = p+2
        edges += [(a, k), (a, k + 1), (k + 1, k + 2)]
        return Graph.from_edges(k + 3, edges)
    # t2: x = p, z = p+1, y = p+2, second tail p+3
    edges += [(a, k), (k, k + 1), (a, k + 2), (k + 2, k + 3)]
    return Graph.from_edges(k + 4, edges)


# ---------------------------------------------------------------- induced search


def _search_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each one (after the first per component) touches an earlier one."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        start = max(remaining, key=lambda v: (h.degree(v), -v))
        order.append(start)
        placed |= 1 << start
        remaining.discard(start)
        while True:
            frontier = [v for v in remaining if h.adj[v] & placed]
            if not frontier:
                break
            v = max(frontier, key=lambda u: (popcount(h.adj[u] & placed), h.degree(u), -u))
            order.append(v)
            placed |= 1 << v
            remaining.discard(v)
    return order


def iter_induced(g: Graph, h: Graph, budget: Budget, within: int | None = None):
    """Yield injections V(h) -> V(g) (as lists indexed by h-vertex) that are induced embeddings."""
    host = g.all_mask if within is None else within
    if h.n > popcount(host):
        return
    order = _search_order(h)
    pos = {v: i for i, v in enumerate(order)}
    hdeg = [h.degree(v) for v in range(h.n)]
    gdeg_ok = [0] * h.n
    for v in range(h.n):
        gdeg_ok[v] = sum(1 << x for x in bits(host) if popcount(g.adj[x] & host) >= hdeg[v])
    # earlier pattern vertices adjacent / nonadjacent to each pattern vertex
    prev = [[(u, bool(h.adj[v] >> u & 1)) for u in order[: pos[v]]] for v in range(h.n)]
    phi = [-1] * h.n

    def extend(i: int, used: int):
        budget.tick()
        if i == h.n:
            yield list(phi)
            return
        v = order[i]
        cand = gdeg_ok[v] & ~used
        for u, adj in prev[v]:
            row = g.adj[phi[u]]
            cand &= row if adj else ~row
            if not cand:
                return
        for x in bits(cand):
            phi[v] = x
            yield from extend(i + 1, used | (1 << x))
        phi[v] = -1

    yield from extend(0, 0)


def is_induced_embedding(g: Graph, h: Graph, phi) -> bool:
    """Direct check that ``phi`` is an injective edge-and-nonedge preserving map."""
    if len(phi) != h.n or len(set(phi)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in phi):
        return False
    return all(
        h.adjacent(u, v) == g.adjacent(phi[u], phi[v])
        for u in range(h.n) for v in range(u + 1, h.n)
    )


def induced_contains(g: Graph, h: Graph, limits: SolverLimits | None = None, within: int | None = None) -> list[int] | None | Unknown:
    """An induced copy of ``h`` in ``g`` as ``phi[h_vertex] = g_vertex``, None if g is h-free."""
    budget = Budget(limits)
    try:
        for phi in iter_induced(g, h, budget, within):
            return phi
    except BudgetExceeded:
        return Unknown()
    return None


def is_free(g: Graph, spec: PatternSpec | Graph, limits: SolverLimits | None = None) -> bool | Unknown:
    h = spec if isinstance(spec, Graph) else realize(spec)
    res = induced_contains(g, h, limits)
    if isinstance(res, Unknown):
        return res
    return res is None


def is_paw_free(g, limits=None):
    return is_free(g, PatternSpec("paw"), limits)


def is_subdart_free(g, limits=None):
    return is_free(g, PatternSpec("sub_dart"), limits)


def is_E_free(g, limits=None):
    return is_free(g, PatternSpec("e_graph"), limits)


def is_H_letter_free(g, limits=None):
    return is_free(g, PatternSpec("h_letter"), limits)


def is_cross_free(g, limits=None):
    return is_free(g, PatternSpec("cross"), limits)


def in_M(g, limits=None):
    return is_paw_free(g, limits)


def in_L(g, limits=None):
    paw = is_paw_free(g, limits)
    if isinstance(paw, Unknown) or not paw:
        return paw
    return is_subdart_free(g, limits)


# ---------------------------------------------------------------- trees


@dataclass(frozen=True)
class RootedTreeParams:
    spread: int
    height: int
    size: int


def embed_params(t: Graph) -> RootedTreeParams:
    """(s, p) with the tree inside H(s, p): s is the maximum degree, p the least
    height over roots of maximum degree. ``size`` is |H(s, p)|."""
    if not is_tree(t):
        raise ValueError("embed_params needs a tree")
    s = max((t.degree(v) for v in range(t.n)), default=0)
    p = min(eccentricity(t, r) for r in range(t.n) if t.degree(r) == s)
    return RootedTreeParams(spread=s, height=p, size=h_tree_size(s, p))


# ---------------------------------------------------------------- tau_2 classes


def in_F1(g: Graph, t: int, limits: SolverLimits | None = None) -> bool | Unknown:
    """tau_2(g) < t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    w = contains_Kdt(g, 2, t, limits)
    if isinstance(w, Unknown):
        return w
    return w is None


def in_F2(g: Graph, t: int, b: int, limits: SolverLimits | None = None) -> bool | Unknown:
    """tau_2(g) >= t, and every K_2(b) subgraph (X, Y) has K_2(t) inside g[X] or g[Y]."""
    if t < 1 or b < 1:
        raise ValueError("t and b must be >= 1")
    f1 = in_F1(g, t, limits)
    if isinstance(f1, Unknown):
        return f1
    if f1:
        return False
    if 2 * b > g.n:
        return True
    try:
        for w in iter_multipartite(g, 2, b, limits):
            ok = False
            for part in w.parts:
                mask = sum(1 << v for v in part)
                inner = next(iter_multipartite(g, 2, t, limits, within=mask), None)
                if inner is not None:
                    ok = True
                    break
            if not ok:
                return False
    except BudgetExceeded:
        return Unknown()
    return True


def in_FT(g: Graph, tree: Graph, t: int, limits: SolverLimits | None = None) -> bool | Unknown:
    from .bounds import beta_T

    f1 = in_F1(g, t, limits)
    if isinstance(f1, Unknown) or f1:
        return f1
    return in_F2(g, t, beta_T(tree, t), limits)
