"""Immutable simple graphs on vertices 0..n-1, stored as adjacency bitmasks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. ``adj[v]`` is the bitmask of neighbours of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_members(g: Graph, s: Iterable[int]) -> list[int]:
    members = list(s)
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if len(set(members)) != len(members):
        raise ValueError("vertex set has repeated members")
    return members


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``; vertex ``s[i]`` becomes vertex ``i``."""
    members = _check_members(g, s)
    rows = []
    for u in members:
        row = 0
        for i, v in enumerate(members):
            if g.adj[u] >> v & 1:
                row |= 1 << i
        rows.append(row)
    return Graph(len(members), tuple(rows))


def component_of(g: Graph, v: int, within: int) -> int:
    """Bitmask of the component containing ``v`` in the subgraph induced by ``within``."""
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(g: Graph, mask: int) -> bool:
    if mask == 0:
        return True
    first = (mask & -mask).bit_length() - 1
    return component_of(g, first, mask) == mask


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.all_mask)


def is_k_connected_mask(g: Graph, mask: int, k: int) -> bool:
    """True iff the subgraph induced by ``mask`` has at least k+1 vertices and
    stays connected after deleting any k-1 of them."""
    size = popcount(mask)
    if k <= 0:
        return True
    if size < k + 1:
        return False
    members = list(bits(mask))
    for cut in combinations(members, k - 1):
        rest = mask & ~to_mask(cut)
        if not is_connected_mask(g, rest):
            return False
    return True


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally disjoint s-t paths (s, t nonadjacent), at most ``cap``.

    Unit-capacity max flow on the split graph: vertex v becomes v_in=2v -> v_out=2v+1.
    """
    n = g.n
    residual: dict[tuple[int, int], int] = {}

    def add(a, b, c):
        residual[(a, b)] = residual.get((a, b), 0) + c
        residual.setdefault((b, a), 0)

    out: list[set[int]] = [set() for _ in range(2 * n)]
    for v in range(n):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
        out[2 * v].add(2 * v + 1)
        out[2 * v + 1].add(2 * v)
        for u in bits(g.adj[v]):
            add(2 * v + 1, 2 * u, n)
            out[2 * v + 1].add(2 * u)
            out[2 * u].add(2 * v + 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(out[a]):
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n-1 for complete graphs, 0 for n <= 1 or disconnected."""
    n = g.n
    if n <= 1 or not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = min(g.degree(v) for v in range(n))
    # Some vertex of a minimum cut's complement lies among any best+1 vertices.
    for s in range(min(best + 1, n)):
        for t in range(n):
            if t != s and not g.adjacent(s, t):
                best = min(best, _local_connectivity(g, s, t, best))
    return best


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Return (degeneracy, elimination order), removing a minimum-degree vertex each step.

    Ties are broken by the smallest vertex id.
    """
    if g.n == 0:
        raise ValueError("degeneracy is undefined for the null graph")
    alive = g.all_mask
    order = []
    d = 0
    while alive:
        v = min(bits(alive), key=lambda u: (popcount(g.adj[u] & alive), u))
        d = max(d, popcount(g.adj[v] & alive))
        order.append(v)
        alive &= ~(1 << v)
    return d, order


def greedy_coloring(g: Graph, order: Sequence[int]) -> list[int]:
    """First-fit coloring along ``order``; returns color per vertex."""
    colors = [-1] * g.n
    for v in order:
        taken = {colors[u] for u in bits(g.adj[v]) if colors[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def eccentricity(g: Graph, root: int) -> int:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v]):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return max(dist.values())


def shortest_path(g: Graph, source: int, targets: int, within: int) -> list[int] | None:
    """BFS path from ``source`` to the nearest vertex of ``targets`` inside ``within``.

    Neighbours are explored in increasing id order, so the result is deterministic.
    """
    if targets >> source & 1:
        return [source]
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & within):
            if u in parent:
                continue
            parent[u] = v
            if targets >> u & 1:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(u)
    return None
