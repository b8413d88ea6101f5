"""Graph corpora: exhaustive small graphs, seeded random graphs, named families, files."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import generators as gen
from .graph import Graph, bits, popcount
from .io import parse_graph6, read_graphs
from .patterns import PatternSpec, parse_pattern, realize

MAX_EXHAUSTIVE = 8


# ---------------------------------------------------------------- canonical form


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {v: tuple(popcount(g.adj[v] & m) for m in masks) for v in cell}
            for key in sorted(set(sig.values())):
                new.append([v for v in cell if sig[v] == key])
        if len(new) == len(cells):
            return new
        cells = new


def _code(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 << pos[u] for u in bits(g.adj[v])) for v in order)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism invariant that separates non-isomorphic graphs.

    Individualization-refinement without automorphism pruning; meant for n <= 10.
    """
    best: list[tuple[int, ...] | None] = [None]

    def search(cells):
        cells = _refine(g, cells)
        i = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if i is None:
            code = _code(g, [c[0] for c in cells])
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        for v in cells[i]:
            rest = [u for u in cells[i] if u != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    degrees: dict[int, list[int]] = {}
    for v in range(g.n):
        degrees.setdefault(g.degree(v), []).append(v)
    search([degrees[k] for k in sorted(degrees)] if g.n else [])
    return (g.n,) + (best[0] or ())


def exhaustive(n_max: int, n_min: int = 0, unique: bool = True) -> Iterator[Graph]:
    """All graphs with n_min <= n <= n_max vertices.

    With ``unique`` each isomorphism class appears once (grown vertex by vertex
    from the classes one size down); otherwise every labeled graph is listed in
    edge-subset order.
    """
    if n_max > MAX_EXHAUSTIVE:
        raise ValueError(f"exhaustive corpora are capped at n <= {MAX_EXHAUSTIVE}")
    if not unique:
        for n in range(n_min, n_max + 1):
            pairs = [(u, v) for v in range(n) for u in range(v)]
            for code in range(1 << len(pairs)):
                yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
        return
    level = [Graph(0, ())]
    for n in range(0, n_max + 1):
        if n >= n_min:
            yield from level
        if n == n_max:
            break
        seen: dict[tuple, Graph] = {}
        for g in level:
            for nbrs in range(1 << n):
                rows = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.adj)]
                h = Graph(n + 1, tuple(rows) + (nbrs,))
                seen.setdefault(canonical_form(h), h)
        level = [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------- corpus specs


def named_graph(text: str) -> Graph:
    """Generator/pattern strings: ``cycle:5``, ``complete:4``, ``kdt:2,3``, ``multipartite:1,2``,
    ``path:4``, ``empty:3``, ``mycielski:cycle:5``, ``g6:D?{``, or any pattern name."""
    name, _, arg = text.partition(":")
    if name == "mycielski":
        return gen.mycielskian(named_graph(arg))
    if name == "g6":
        return parse_graph6(arg)
    nums = tuple(int(x) for x in arg.split(",")) if arg else ()
    if name == "cycle":
        return gen.cycle(*nums)
    if name == "complete":
        return gen.complete(*nums)
    if name == "empty":
        return gen.empty(*nums)
    if name == "kdt":
        return gen.kdt(*nums)
    if name == "multipartite":
        return gen.complete_multipartite(nums)
    if name == "grotzsch":
        return gen.mycielskian(gen.cycle(5))
    return realize(parse_pattern(text))


FILTERS: dict[str, Callable[[Graph], object]] = {}


def _filters():
    if not FILTERS:
        from .graph import is_connected
        from .patterns import in_L, in_M

        FILTERS.update({
            "paw_free": in_M,
            "in_L": in_L,
            "connected": is_connected,
        })
    return FILTERS


@dataclass
class CorpusSpec:
    source: str  # exhaustive | random | named | file
    n: int = 0
    n_min: int = 0
    prob: float = 0.5
    count: int = 0
    seed: int | None = None
    names: list[str] = field(default_factory=list)
    path: str = ""
    filters: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.source not in ("exhaustive", "random", "named", "file"):
            raise ValueError(f"unknown corpus source {self.source!r}")
        if self.source == "exhaustive" and self.n > MAX_EXHAUSTIVE:
            raise ValueError(f"exhaustive corpora are capped at n <= {MAX_EXHAUSTIVE}")
        if self.source == "random" and self.seed is None:
            raise ValueError("random corpora require a seed")
        for f in self.filters:
            if f not in _filters():
                raise ValueError(f"unknown filter {f!r}")

    def describe(self) -> str:
        return parse_corpus_inverse(self)

    def graphs(self) -> Iterator[Graph]:
        if self.source == "exhaustive":
            it = exhaustive(self.n, self.n_min)
        elif self.source == "random":
            it = (gen.gnp(self.n, self.prob, self.seed + i) for i in range(self.count))
        elif self.source == "named":
            it = (named_graph(s) for s in self.names)
        else:
            it = read_graphs(self.path)
        preds = [_filters()[f] for f in self.filters]
        for g in it:
            if all(p(g) is True for p in preds):
                yield g


def parse_corpus(text: str, filters: list[str] | None = None) -> CorpusSpec:
    """``exhaustive:N``, ``random:n,p,count,seed``, ``named:spec;spec``, ``file:PATH``."""
    kind, _, arg = text.partition(":")
    filters = list(filters or [])
    if kind == "exhaustive":
        return CorpusSpec("exhaustive", n=int(arg), filters=filters)
    if kind == "random":
        n, prob, count, seed = arg.split(",")
        return CorpusSpec("random", n=int(n), prob=float(prob), count=int(count), seed=int(seed), filters=filters)
    if kind == "named":
        return CorpusSpec("named", names=[s for s in arg.split(";") if s], filters=filters)
    if kind == "file":
        return CorpusSpec("file", path=arg, filters=filters)
    raise ValueError(f"unknown corpus {text!r}")


def parse_corpus_inverse(c: CorpusSpec) -> str:
    if c.source == "exhaustive":
        return f"exhaustive:{c.n}"
    if c.source == "random":
        return f"random:{c.n},{c.prob},{c.count},{c.seed}"
    if c.source == "named":
        return "named:" + ";".join(c.names)
    return f"file:{c.path}"
