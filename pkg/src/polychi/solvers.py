"""Exact chromatic number, clique number and complete multipartite subgraph search.

Every search runs under a :class:`SolverLimits` budget. When the budget runs
out the public functions return an :class:`Unknown` carrying the best bounds
found so far instead of raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, bits, greedy_coloring, degeneracy, popcount, to_mask


@dataclass(frozen=True)
class SolverLimits:
    node_budget: int = 5_000_000
    time_budget: float | None = None

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


DEFAULT_LIMITS = SolverLimits()


@dataclass(frozen=True)
class Unknown:
    """A search gave up. ``lower``/``upper`` bound the true answer; ``witness`` backs ``lower``."""

    lower: int | None = None
    upper: int | None = None
    witness: object = None
    reason: str = "budget exceeded"

    def __bool__(self):
        raise TypeError("Unknown has no truth value; check isinstance(result, Unknown) first")


class BudgetExceeded(Exception):
    pass


class Budget:
    """Counts search nodes against a :class:`SolverLimits`."""

    def __init__(self, limits: SolverLimits | None):
        self.limits = limits or DEFAULT_LIMITS
        self.nodes = 0
        self.deadline = (
            time.monotonic() + self.limits.time_budget if self.limits.time_budget else None
        )

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limits.node_budget:
            raise BudgetExceeded
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded


def is_unknown(x) -> bool:
    return isinstance(x, Unknown)


# ---------------------------------------------------------------- cliques


def _max_clique(g: Graph, within: int, budget: Budget, floor: int = 0) -> int:
    """Bitmask of a maximum clique inside ``within`` (greedy-coloring bound)."""
    adj = g.adj
    best = [0, 0]  # size, mask

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # Sequential greedy coloring; returns (vertex, color index) in increasing color.
        order = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append((v, color))
        return order

    def expand(clique: int, size: int, cand: int):
        budget.tick()
        order = color_bound(cand)
        for v, c in reversed(order):
            if size + c <= best[0]:
                return
            new = clique | (1 << v)
            ncand = cand & adj[v]
            if ncand:
                expand(new, size + 1, ncand)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, new
            cand &= ~(1 << v)

    best[0] = floor
    if within:
        expand(0, 0, within)
    return best[1]


def solve_clique(g: Graph, limits: SolverLimits | None = None) -> list[int] | Unknown:
    """A maximum clique as a sorted vertex list, or Unknown."""
    budget = Budget(limits)
    try:
        return list(bits(_max_clique(g, g.all_mask, budget)))
    except BudgetExceeded:
        return Unknown(lower=None, upper=None)


def clique_number(g: Graph, limits: SolverLimits | None = None) -> int | Unknown:
    res = solve_clique(g, limits)
    return res if isinstance(res, Unknown) else len(res)


# ---------------------------------------------------------------- coloring


@dataclass
class Coloring:
    chi: int
    colors: list[int] = field(default_factory=list)


def _dsatur_order_coloring(g: Graph) -> list[int]:
    """Heuristic DSATUR coloring used as the initial upper bound."""
    n = g.n
    colors = [-1] * n
    sat = [0] * n  # bitmask of neighbouring colors
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (popcount(sat[u]), g.degree(u), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    return colors


def _exact_coloring(g: Graph, budget: Budget, state: dict) -> Coloring:
    """Branch and bound over DSATUR vertex choice."""
    n = g.n
    if n == 0:
        return Coloring(0, [])
    seed = _dsatur_order_coloring(g)
    _, order = degeneracy(g)
    greedy = greedy_coloring(g, order[::-1])
    if max(greedy) < max(seed):
        seed = greedy
    best_colors = list(seed)
    best = [max(seed) + 1]
    clique = list(bits(_max_clique(g, g.all_mask, budget)))
    lower = len(clique)
    state["lower"], state["upper"], state["colors"] = lower, best[0], best_colors
    if lower == best[0]:
        return Coloring(best[0], best_colors)

    colors = [-1] * n
    # Precolor the clique to break color symmetry.
    for i, v in enumerate(clique):
        colors[v] = i
    sat = [0] * n
    for v in clique:
        for u in bits(g.adj[v]):
            sat[u] |= 1 << colors[v]
    degree = [g.degree(v) for v in range(n)]

    def recurse(colored: int, used: int):
        budget.tick()
        if colored == n:
            if used < best[0]:
                best[0] = used
                best_colors[:] = colors
                state["upper"] = used
            return
        v = -1
        key = (-1, -1)
        for u in range(n):
            if colors[u] < 0:
                k = (popcount(sat[u]), degree[u])
                if k > key:
                    key, v = k, u
        limit = min(used + 1, best[0] - 1)
        for c in range(limit):
            if sat[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if colors[u] < 0 and not sat[u] >> c & 1:
                    sat[u] |= 1 << c
                    touched.append(u)
            recurse(colored + 1, max(used, c + 1))
            for u in touched:
                sat[u] &= ~(1 << c)
            colors[v] = -1
            if best[0] == lower:
                return

    recurse(len(clique), len(clique))
    return Coloring(best[0], best_colors)


def solve_coloring(g: Graph, limits: SolverLimits | None = None) -> Coloring | Unknown:
    """Optimal coloring with its witness, or Unknown with the bounds reached."""
    budget = Budget(limits)
    state: dict = {}
    try:
        return _exact_coloring(g, budget, state)
    except BudgetExceeded:
        return Unknown(lower=state.get("lower"), upper=state.get("upper"), witness=state.get("colors"))


def chromatic_number(g: Graph, limits: SolverLimits | None = None) -> int | Unknown:
    res = solve_coloring(g, limits)
    return res if isinstance(res, Unknown) else res.chi


_chi_cache: dict[tuple[Graph, int], int] = {}


def chi_of_mask(g: Graph, mask: int, budget: Budget) -> int:
    """Chromatic number of the subgraph induced by ``mask``; raises BudgetExceeded."""
    key = (g, mask)
    hit = _chi_cache.get(key)
    if hit is not None:
        return hit
    members = list(bits(mask))
    index = {v: i for i, v in enumerate(members)}
    rows = tuple(
        sum(1 << index[u] for u in bits(g.adj[v] & mask)) for v in members
    )
    value = _exact_coloring(Graph(len(members), rows), budget, {}).chi
    if len(_chi_cache) > 200_000:
        _chi_cache.clear()
    _chi_cache[key] = value
    return value


# ---------------------------------------------------------------- K_d(t)


@dataclass(frozen=True)
class MultipartiteWitness:
    parts: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts[0]) if self.parts else 0


def validate_multipartite(g: Graph, w: MultipartiteWitness, d: int | None = None, t: int | None = None) -> bool:
    parts = w.parts
    if d is not None and len(parts) != d:
        return False
    if not parts:
        return False
    size = len(parts[0])
    if t is not None and size != t:
        return False
    seen = set()
    for part in parts:
        if len(part) != size or len(set(part)) != size:
            return False
        for v in part:
            if not 0 <= v < g.n or v in seen:
                return False
            seen.add(v)
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            for u in a:
                for v in b:
                    if not g.adjacent(u, v):
                        return False
    return True


def _iter_kdt(g: Graph, d: int, t: int, budget: Budget, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield each K_d(t) subgraph once as a tuple of part bitmasks, parts ordered by minimum member."""
    adj = g.adj
    pool0 = g.all_mask if within is None else within

    def parts_from(chosen: list[int], pool: int, after: int):
        # ``pool``: vertices adjacent to everything chosen so far; next part's min > after.
        budget.tick()
        remaining = d - len(chosen)
        if remaining == 0:
            yield tuple(chosen)
            return
        if popcount(pool) < remaining * t:
            return
        starts = pool & ~((1 << (after + 1)) - 1)
        for first in bits(starts):
            yield from build(chosen, pool, first, 1 << first, pool & adj[first], pool & ~((1 << (first + 1)) - 1))

    def build(chosen, pool, first, part, later, cand):
        # Grow ``part`` (min ``first``) from ``cand``; ``later`` is the pool for subsequent parts.
        budget.tick()
        remaining = d - len(chosen) - 1
        if popcount(later & ~part) < remaining * t:
            return
        if popcount(part) == t:
            yield from parts_from(chosen + [part], later, first)
            return
        for v in bits(cand):
            cand &= ~(1 << v)
            if popcount(cand) + 1 + popcount(part) < t:
                return
            yield from build(chosen, pool, first, part | (1 << v), later & adj[v], cand)

    if d < 1 or t < 1:
        return
    yield from parts_from([], pool0, -1)


def _to_witness(parts: tuple[int, ...]) -> MultipartiteWitness:
    return MultipartiteWitness(tuple(tuple(bits(p)) for p in parts))


def iter_multipartite(g: Graph, d: int, t: int, limits: SolverLimits | None = None, within: int | None = None) -> Iterator[MultipartiteWitness]:
    """All K_d(t) subgraphs (each unordered part family once). Raises BudgetExceeded."""
    budget = Budget(limits)
    for parts in _iter_kdt(g, d, t, budget, within):
        yield _to_witness(parts)


def contains_Kdt(g: Graph, d: int, t: int, limits: SolverLimits | None = None) -> MultipartiteWitness | None | Unknown:
    """A K_d(t) subgraph witness, None if absent, Unknown if the budget ran out."""
    if d < 1 or t < 1:
        raise ValueError("d and t must be >= 1")
    if d * t > g.n:
        return None
    budget = Budget(limits)
    try:
        for parts in _iter_kdt(g, d, t, budget):
            return _to_witness(parts)
    except BudgetExceeded:
        return Unknown()
    return None


def tau_d(g: Graph, d: int, limits: SolverLimits | None = None) -> tuple[int, MultipartiteWitness | None] | Unknown:
    """Largest t with K_d(t) as a subgraph, and a witness (None when t = 0)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return g.n, (MultipartiteWitness((tuple(range(g.n)),)) if g.n else None)
    best_t, best_w = 0, None
    budget = Budget(limits)
    t = 1
    try:
        while d * t <= g.n:
            found = None
            for parts in _iter_kdt(g, d, t, budget):
                found = parts
                break
            if found is None:
                break
            best_t, best_w = t, _to_witness(found)
            t += 1
    except BudgetExceeded:
        return Unknown(lower=best_t, upper=g.n // d, witness=best_w)
    return best_t, best_w
