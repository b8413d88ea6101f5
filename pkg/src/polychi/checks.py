"""Corpus-wide verification of the checkable statements.

Each check maps one graph to ``None`` (hypothesis not met, not counted),
``SKIP`` (a solver gave up) or a list of violation detail dicts (empty = pass).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import bounds
from .corpus import CorpusSpec
from .generators import attach_path
from .graph import Graph, bits, degeneracy, greedy_coloring, is_connected, to_mask
from .io import serialize_graph6
from .patterns import (
    PatternSpec,
    embed_params,
    in_FT,
    in_L,
    in_M,
    induced_contains,
    is_induced_embedding,
    parse_pattern,
    realize,
)
from .solvers import SolverLimits, Unknown, chi_of_mask, Budget, chromatic_number, clique_number, contains_Kdt
from .structures import BalloonCert, extract_T1, extract_T2, max_balloon_value, max_biclique_value

SKIP = object()


@dataclass
class CheckReport:
    check_name: str
    corpus_size: int = 0
    checked: int = 0
    skipped_unknown: int = 0
    violations: list[dict] = field(default_factory=list)
    wall_time_ms: int = 0
    notes: dict = field(default_factory=dict)

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "check_name": self.check_name,
            "corpus_size": self.corpus_size,
            "checked": self.checked,
            "skipped_unknown": self.skipped_unknown,
            "violations": sorted(self.violations, key=lambda v: (v["graph6"], json.dumps(v["details"], sort_keys=True))),
            "wall_time_ms": self.wall_time_ms if include_timing else 0,
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)


def _any_unknown(*xs) -> bool:
    return any(isinstance(x, Unknown) for x in xs)


def check_lemma1(g: Graph, params: dict, limits):
    chi = chromatic_number(g, limits)
    if _any_unknown(chi):
        return SKIP
    bad = []
    for p, t in params.get("grid", [(1, 1), (1, 2), (2, 1), (2, 2)]):
        bal = max_balloon_value(g, p, t, limits)
        bic = max_biclique_value(g, t, limits)
        if _any_unknown(bal, bic):
            return SKIP
        q, s = bal[0] + 1, bic[0] + 1
        rhs = bounds.lemma1_rhs(p, q, s, t)
        if chi > rhs:
            bad.append({"p": p, "t": t, "q": q, "s": s, "chi": chi, "rhs": rhs})
    return bad


_RANDERATH_VARIANTS = ("e_graph", "h_letter", "cross")


def check_randerath(g: Graph, params: dict, limits):
    paw = in_M(g, limits)
    if _any_unknown(paw):
        return SKIP
    if not paw:
        return None
    frees = {}
    for kind in _RANDERATH_VARIANTS:
        w = induced_contains(g, realize(PatternSpec(kind)), limits)
        if _any_unknown(w):
            return SKIP
        frees[kind] = w is None
    if not any(frees.values()):
        return None
    chi, omega = chromatic_number(g, limits), clique_number(g, limits)
    if _any_unknown(chi, omega):
        return SKIP
    if chi > bounds.randerath_bound(omega):
        return [{"free_of": [k for k, v in frees.items() if v], "chi": chi, "omega": omega}]
    return []


def check_randerath_contrapositive(g: Graph, params: dict, limits):
    paw = in_M(g, limits)
    if _any_unknown(paw):
        return SKIP
    if not paw:
        return None
    chi, omega = chromatic_number(g, limits), clique_number(g, limits)
    if _any_unknown(chi, omega):
        return SKIP
    if chi < omega + 2:
        return None
    missing = []
    for kind in _RANDERATH_VARIANTS:
        w = induced_contains(g, realize(PatternSpec(kind)), limits)
        if _any_unknown(w):
            return SKIP
        if w is None:
            missing.append(kind)
    return [{"missing": missing, "chi": chi, "omega": omega}] if missing else []


def check_degeneracy_greedy(g: Graph, params: dict, limits):
    if g.n == 0:
        return None
    d, order = degeneracy(g)
    used = max(greedy_coloring(g, order[::-1])) + 1
    chi = chromatic_number(g, limits)
    if _any_unknown(chi):
        return SKIP
    if chi > d + 1 or used > d + 1:
        return [{"chi": chi, "degeneracy": d, "greedy_colors": used}]
    return []


def _no_kdt(g, d, t, limits):
    w = contains_Kdt(g, d, t, limits)
    return w if isinstance(w, Unknown) else w is None


def _hyp(*values):
    """Combine hypothesis flags: SKIP if any is Unknown, else their conjunction."""
    if _any_unknown(*values):
        return SKIP
    return all(values)


def _bound_check(g, limits, hyp, bound, label):
    if hyp is SKIP:
        return SKIP
    if not hyp:
        return None
    chi = chromatic_number(g, limits)
    if _any_unknown(chi):
        return SKIP
    if chi > bound:
        return [{"chi": chi, "bound": label}]
    return []


def _free(g, spec, limits):
    h = spec if isinstance(spec, Graph) else realize(spec)
    w = induced_contains(g, h, limits)
    return w if isinstance(w, Unknown) else w is None


def check_thm8(g: Graph, params: dict, limits):
    d, t, p = params.get("d", 2), params.get("t", 1), params.get("p", 4)
    hyp = _hyp(in_M(g, limits), _free(g, PatternSpec("t1", (p,)), limits), _no_kdt(g, d, t, limits))
    return _bound_check(g, limits, hyp, bounds.thm8_f(d, p, t), f"thm8_f({d},{p},{t})")


def check_thm9(g: Graph, params: dict, limits):
    d, t, p = params.get("d", 2), params.get("t", 1), params.get("p", 4)
    hyp = _hyp(in_L(g, limits), _free(g, PatternSpec("t2", (p,)), limits), _no_kdt(g, d, t, limits))
    return _bound_check(g, limits, hyp, bounds.thm9_f(d, p, t), f"thm9_f({d},{p},{t}) relative to f0=identity")


def check_thm10(g: Graph, params: dict, limits):
    d, t = params.get("d", 2), params.get("t", 1)
    tree = realize(parse_pattern(params.get("tree", "t1:4")))
    p = embed_params(tree).height
    hyp = _hyp(_free(g, tree, limits), _no_kdt(g, d, t, limits), _no_kdt(g, t, t, limits))
    return _bound_check(g, limits, hyp, bounds.thm10_f(d, p, t), f"thm10_f({d},{p},{t})")


def check_thm11(g: Graph, params: dict, limits):
    d, t = params.get("d", 2), params.get("t", 1)
    tree = realize(parse_pattern(params.get("tree", "t1:4")))
    hyp = _hyp(in_FT(g, tree, t, limits), _free(g, tree, limits), _no_kdt(g, d, t, limits))
    return _bound_check(g, limits, hyp, bounds.thm11_f(d, tree, t), f"thm11_f({d},tree,{t})")


def pendant_balloon(core: Graph, length: int, anchor: int = 0, t: int = 1) -> tuple[Graph, BalloonCert]:
    """Glue a path of ``length`` vertices to ``anchor`` and return the balloon it forms with Y = V(core)."""
    g, new = attach_path(core, anchor, length)
    ymask = core.all_mask
    zmask = ymask & ~g.adj[anchor]
    value = chi_of_mask(g, zmask, Budget(None))
    cert = BalloonCert(tuple(new) + (anchor,), tuple(bits(ymask)), tuple(bits(zmask)), value, length + 1, t)
    return g, cert


def _check_extraction(g: Graph, params: dict, limits, kind: str):
    if g.n == 0 or not is_connected(g):
        return None
    if kind == "t1":
        ok = in_M(g, limits)
        chi, omega = chromatic_number(g, limits), clique_number(g, limits)
        if _any_unknown(ok, chi, omega):
            return SKIP
        if not ok or chi < omega + 2:
            return None
    else:
        ok = in_L(g, limits)
        h = induced_contains(g, realize(PatternSpec("h_tree", (3, 2))), limits)
        if _any_unknown(ok, h):
            return SKIP
        if not ok or h is None:
            return None
    bad = []
    for length in params.get("lengths", [4, 5, 6]):
        host, balloon = pendant_balloon(g, length)
        w = extract_T1(host, balloon, limits) if kind == "t1" else extract_T2(host, balloon, 1, limits)
        if _any_unknown(w):
            return SKIP
        if w is None:
            bad.append({"length": length, "error": "no witness"})
            continue
        recheck = induced_contains(host, w.pattern, limits, within=to_mask(w.mapping))
        if not is_induced_embedding(host, w.pattern, w.mapping) or recheck is None:
            bad.append({"length": length, "error": "witness failed verification", "mapping": list(w.mapping)})
    return bad


def check_extraction_t1(g, params, limits):
    return _check_extraction(g, params, limits, "t1")


def check_extraction_t2(g, params, limits):
    return _check_extraction(g, params, limits, "t2")


CHECKS = {
    "lemma1": check_lemma1,
    "randerath": check_randerath,
    "randerath_contrapositive": check_randerath_contrapositive,
    "degeneracy_greedy": check_degeneracy_greedy,
    "thm8": check_thm8,
    "thm9": check_thm9,
    "thm10": check_thm10,
    "thm11": check_thm11,
    "extraction_t1": check_extraction_t1,
    "extraction_t2": check_extraction_t2,
}


def run_check(name: str, corpus: CorpusSpec, params: dict | None = None,
              limits: SolverLimits | None = None) -> CheckReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
    params = params or {}
    fn = CHECKS[name]
    report = CheckReport(name)
    if name == "thm9":
        report.notes["f0"] = "identity"
    start = time.perf_counter()
    for g in corpus.graphs():
        report.corpus_size += 1
        res = fn(g, params, limits)
        if res is SKIP:
            report.skipped_unknown += 1
        elif res is not None:
            report.checked += 1
            code = serialize_graph6(g)
            report.violations.extend({"graph6": code, "details": det} for det in res)
    report.wall_time_ms = int((time.perf_counter() - start) * 1000)
    return report
