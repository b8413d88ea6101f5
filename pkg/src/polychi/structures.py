"""Balloons, bicliques and the induced T1/T2 extraction built on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, induced_subgraph, is_k_connected_mask, popcount, shortest_path, to_mask
from .patterns import (
    PatternSpec,
    in_L,
    induced_contains,
    is_induced_embedding,
    is_paw_free,
    iter_induced,
    realize,
)
from .solvers import (
    Budget,
    BudgetExceeded,
    SolverLimits,
    Unknown,
    chi_of_mask,
    chromatic_number,
    clique_number,
)


class PreconditionError(ValueError):
    """The input does not satisfy the hypothesis an extraction relies on."""


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class BicliqueCert:
    X: tuple[int, ...]
    Y: tuple[int, ...]
    value: int

    def to_json(self) -> dict:
        return {"kind": "biclique", "path": [], "X": list(self.X), "Y": list(self.Y), "Z": [],
                "value": self.value, "p": None, "t": len(self.X)}


@dataclass(frozen=True)
class BalloonCert:
    path: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    value: int
    p: int
    t: int

    def to_json(self) -> dict:
        return {"kind": "balloon", "path": list(self.path), "X": [], "Y": list(self.Y),
                "Z": list(self.Z), "value": self.value, "p": self.p, "t": self.t}


def cert_from_json(obj: dict) -> BicliqueCert | BalloonCert:
    if obj["kind"] == "biclique":
        return BicliqueCert(tuple(obj["X"]), tuple(obj["Y"]), obj["value"])
    if obj["kind"] == "balloon":
        return BalloonCert(tuple(obj["path"]), tuple(obj["Y"]), tuple(obj["Z"]),
                           obj["value"], obj["p"], obj["t"])
    raise ValueError(f"unknown certificate kind {obj['kind']!r}")


def t_connected(g: Graph, mask: int, t: int) -> bool:
    """kappa >= t with at least t+1 vertices; a single vertex counts as 1-connected."""
    if t == 1 and popcount(mask) == 1:
        return True
    return is_k_connected_mask(g, mask, t)


def _in_range(g: Graph, vs) -> bool:
    return all(0 <= v < g.n for v in vs) and len(set(vs)) == len(vs)


def validate_biclique(g: Graph, cert: BicliqueCert, t: int | None = None, limits: SolverLimits | None = None) -> Verdict:
    X, Y = cert.X, cert.Y
    if not _in_range(g, X) or not _in_range(g, Y):
        return Verdict(False, "vertex out of range or repeated")
    if t is not None and len(X) != t:
        return Verdict(False, "wrong |X|")
    if not X:
        return Verdict(False, "empty X")
    if set(X) & set(Y):
        return Verdict(False, "X and Y intersect")
    if any(not g.adjacent(x, y) for x in X for y in Y):
        return Verdict(False, "Y not complete to X")
    value = chi_of_mask(g, to_mask(Y), Budget(limits)) if Y else 0
    if value != cert.value:
        return Verdict(False, f"value mismatch: recomputed {value}")
    return Verdict(True)


def validate_balloon(g: Graph, cert: BalloonCert, p: int | None = None, t: int | None = None,
                     limits: SolverLimits | None = None) -> Verdict:
    p = cert.p if p is None else p
    t = cert.t if t is None else t
    path, Y = cert.path, cert.Y
    if p < 1 or t < 1:
        return Verdict(False, "p and t must be >= 1")
    if len(path) != p:
        return Verdict(False, "path length differs from p")
    if not _in_range(g, path) or not _in_range(g, Y) or not _in_range(g, cert.Z):
        return Verdict(False, "vertex out of range or repeated")
    for i in range(p):
        for j in range(i + 1, p):
            if g.adjacent(path[i], path[j]) != (j == i + 1):
                return Verdict(False, "path is not an induced path")
    ymask = to_mask(Y)
    vp = path[-1]
    if not ymask >> vp & 1:
        return Verdict(False, "v_p not in Y")
    if any(ymask >> v & 1 for v in path[:-1]):
        return Verdict(False, "v_1..v_{p-1} meet Y")
    if any(g.adj[v] & ymask for v in path[:-2]):
        return Verdict(False, "v_1..v_{p-2} have a neighbour in Y")
    if p >= 2 and g.adj[path[-2]] & ymask != 1 << vp:
        return Verdict(False, "v_p is not the unique neighbour of v_{p-1} in Y")
    if not t_connected(g, ymask, t):
        return Verdict(False, "G[Y] is not t-connected")
    zmask = ymask & ~g.adj[vp]
    if to_mask(cert.Z) != zmask or len(cert.Z) != popcount(zmask):
        return Verdict(False, "Z is not the non-neighbourhood of v_p in Y")
    value = chi_of_mask(g, zmask, Budget(limits))
    if value != cert.value:
        return Verdict(False, f"value mismatch: recomputed {value}")
    return Verdict(True)


# ---------------------------------------------------------------- searches


def max_biclique_value(g: Graph, t: int, limits: SolverLimits | None = None) -> tuple[int, BicliqueCert | None] | Unknown:
    """Largest chi(Y) over t-bicliques (X, Y); 0 and None if every common neighbourhood is empty."""
    if t < 1:
        raise ValueError("t must be >= 1")
    budget = Budget(limits)
    best, cert = 0, None
    try:
        for X in combinations(range(g.n), t):
            budget.tick()
            common = g.all_mask
            for x in X:
                common &= g.adj[x]
            if popcount(common) == 0 or popcount(common) <= best:
                continue
            value = chi_of_mask(g, common, budget)
            if value > best:
                best, cert = value, BicliqueCert(X, tuple(bits(common)), value)
    except BudgetExceeded:
        return Unknown(lower=best, witness=cert)
    return best, cert


def iter_induced_paths(g: Graph, p: int, budget: Budget | None = None):
    """Every induced path on p vertices, as an ordered tuple (both directions)."""

    def grow(path: list[int], used: int, blocked: int):
        # ``blocked``: neighbours of path vertices other than the last one.
        if budget is not None:
            budget.tick()
        if len(path) == p:
            yield tuple(path)
            return
        last = path[-1]
        for u in bits(g.adj[last] & ~used & ~blocked):
            path.append(u)
            yield from grow(path, used | (1 << u), blocked | g.adj[last])
            path.pop()

    for v in range(g.n):
        yield from grow([v], 1 << v, 0)


def _balloon_pool(g: Graph, path: tuple[int, ...]) -> int:
    pool = g.all_mask & ~to_mask(path[:-1])
    for v in path[:-2]:
        pool &= ~g.adj[v]
    if len(path) >= 2:
        pool &= ~(g.adj[path[-2]] & ~(1 << path[-1]))
    return pool


def _subsets_desc(mask: int):
    members = list(bits(mask))
    for k in range(len(members), -1, -1):
        for combo in combinations(members, k):
            yield to_mask(combo)


def max_balloon_value(g: Graph, p: int, t: int, limits: SolverLimits | None = None) -> tuple[int, BalloonCert | None] | Unknown:
    """Largest value over all (p, t)-balloons, with a certificate; (0, None) if there are none."""
    if p < 1 or t < 1:
        raise ValueError("p and t must be >= 1")
    budget = Budget(limits)
    best, cert = 0, None
    try:
        for path in iter_induced_paths(g, p, budget):
            vp = path[-1]
            pool = _balloon_pool(g, path)
            far = pool & ~g.adj[vp]
            near = pool & g.adj[vp]
            if chi_of_mask(g, far, budget) <= best:
                continue
            for w in _subsets_desc(far & ~(1 << vp)):
                budget.tick()
                z = w | (1 << vp)
                if popcount(z) <= best:
                    break
                value = chi_of_mask(g, z, budget)
                if value <= best:
                    continue
                hit = None
                for extra in _subsets_desc(near):
                    budget.tick()
                    y = z | extra
                    if t_connected(g, y, t):
                        hit = y
                        break
                if hit is not None:
                    best = value
                    cert = BalloonCert(path, tuple(bits(hit)), tuple(bits(z)), value, p, t)
                    if best == chi_of_mask(g, far, budget):
                        break
    except BudgetExceeded:
        return Unknown(lower=best, witness=cert)
    return best, cert


# ---------------------------------------------------------------- extraction


@dataclass(frozen=True)
class TreeWitness:
    """An induced copy of realize(PatternSpec(kind, (p,))) in the host: ``mapping[i]`` is the image of vertex i."""

    kind: str
    p: int
    mapping: tuple[int, ...]
    core: tuple[int, ...]
    connector: tuple[int, ...]

    @property
    def pattern(self) -> Graph:
        return realize(PatternSpec(self.kind, (self.p,)))


def _check_balloon(g: Graph, balloon: BalloonCert, limits) -> int:
    verdict = validate_balloon(g, balloon, limits=limits)
    if not verdict:
        raise PreconditionError(f"invalid balloon: {verdict.reason}")
    return to_mask(balloon.Y)


def _assemble(g: Graph, kind: str, balloon: BalloonCert, core: list[int], budget: Budget) -> TreeWitness | None:
    """Search the vertices of P, the connector Q and the core for the longest induced tree of ``kind``."""
    ymask = to_mask(balloon.Y)
    q = shortest_path(g, balloon.path[-1], to_mask(core), ymask)
    if q is None:
        return None
    region = to_mask(balloon.path) | to_mask(q) | to_mask(core)
    extra = 3 if kind == "t1" else 4
    for p in range(popcount(region) - extra, 3, -1):
        h = realize(PatternSpec(kind, (p,)))
        for phi in iter_induced(g, h, budget, within=region):
            if not is_induced_embedding(g, h, phi):
                raise AssertionError("search produced a non-induced embedding")
            return TreeWitness(kind, p, tuple(phi), tuple(core), tuple(q))
    return None


def extract_T1(g: Graph, balloon: BalloonCert, limits: SolverLimits | None = None) -> TreeWitness | None | Unknown:
    """Locate an induced E-graph in Y, join it to v_p by a shortest path Q and return
    an induced T1 on the vertices of P, Q and E."""
    paw = is_paw_free(g, limits)
    if isinstance(paw, Unknown):
        return paw
    if not paw:
        raise PreconditionError("graph contains a paw")
    ymask = _check_balloon(g, balloon, limits)
    chi_y = chromatic_number(induced_subgraph(g, bits(ymask)), limits)
    omega = clique_number(g, limits)
    if isinstance(chi_y, Unknown) or isinstance(omega, Unknown):
        return Unknown()
    if chi_y < omega + 2:
        raise PreconditionError(f"chi(Y) = {chi_y} is below omega(G) + 2 = {omega + 2}")
    e = induced_contains(g, realize(PatternSpec("e_graph")), limits, within=ymask)
    if isinstance(e, Unknown) or e is None:
        return e
    try:
        return _assemble(g, "t1", balloon, e, Budget(limits))
    except BudgetExceeded:
        return Unknown()


def extract_T2(g: Graph, balloon: BalloonCert, min_value: int = 1,
               limits: SolverLimits | None = None) -> TreeWitness | None | Unknown:
    """Locate an induced H(3,2) in Y, join it to v_p by a shortest path Q and return
    an induced T2 on the vertices of P, Q and H(3,2).

    ``min_value`` is the balloon value the caller relies on to force H(3,2).
    """
    member = in_L(g, limits)
    if isinstance(member, Unknown):
        return member
    if not member:
        raise PreconditionError("graph is not paw-free and sub-dart-free")
    ymask = _check_balloon(g, balloon, limits)
    if balloon.value < min_value:
        raise PreconditionError(f"balloon value {balloon.value} below the supplied threshold {min_value}")
    h = induced_contains(g, realize(PatternSpec("h_tree", (3, 2))), limits, within=ymask)
    if isinstance(h, Unknown):
        return h
    if h is None:
        raise PreconditionError("Y contains no induced H(3,2)")
    try:
        return _assemble(g, "t2", balloon, h, Budget(limits))
    except BudgetExceeded:
        return Unknown()

