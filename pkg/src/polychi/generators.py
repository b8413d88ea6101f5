"""Standard graph families."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph, bits


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive vertex ranges in the given order."""
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("complete multipartite graph needs nonempty parts")
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph(n, tuple(rows))


def kdt(d: int, t: int) -> Graph:
    """K_d(t): complete d-partite graph with parts of size t."""
    if d < 1 or t < 1:
        raise ValueError("K_d(t) needs d, t >= 1")
    return complete_multipartite([t] * d)


def mycielskian(g: Graph) -> Graph:
    """Vertices 0..n-1 keep g, n..2n-1 are shadows, 2n is the apex."""
    n = g.n
    edges = list(g.edges())
    for v in range(n):
        for u in bits(g.adj[v]):
            edges.append((n + v, u))
        edges.append((n + v, 2 * n))
    return Graph.from_edges(2 * n + 1, edges)


def gnp(n: int, prob: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) drawn from an explicitly seeded generator."""
    if seed is None:
        raise ValueError("random graphs require an explicit seed")
    if not 0.0 <= prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < prob]
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    rows = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def attach_path(g: Graph, anchor: int, length: int) -> tuple[Graph, list[int]]:
    """Glue a new path of ``length`` vertices to ``anchor``.

    Returns the graph and the new path vertices ordered from the far end, so
    the last one is adjacent to ``anchor``.
    """
    if length < 1:
        raise ValueError("pendant path needs at least one vertex")
    n = g.n
    new = list(range(n, n + length))
    edges = g.edges() + [(new[i], new[i + 1]) for i in range(length - 1)]
    edges.append((new[-1], anchor))
    return Graph.from_edges(n + length, edges), new
