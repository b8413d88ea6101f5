"""Command-line entry point: ``polychi <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds
from .checks import CHECKS, run_check
from .corpus import named_graph, parse_corpus
from .generators import gnp, mycielskian
from .graph import Graph, degeneracy
from .io import parse_graph6, read_graphs, serialize_graph6
from .patterns import in_F1, in_F2, in_L, in_M, induced_contains, parse_pattern, realize
from .solvers import SolverLimits, Unknown, chromatic_number, clique_number, tau_d
from .structures import max_balloon_value, max_biclique_value


class UsageError(Exception):
    pass


def _graphs(arg: str) -> list[Graph]:
    if Path(arg).is_file():
        return list(read_graphs(arg))
    try:
        return [parse_graph6(arg)]
    except ValueError:
        pass
    try:
        return [named_graph(arg)]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot read graph {arg!r}: {exc}") from exc


def _fmt(x) -> str:
    if isinstance(x, Unknown):
        return "unknown"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _limits(args) -> SolverLimits:
    return SolverLimits(node_budget=args.node_budget, time_budget=args.time_budget)


def cmd_gen(args) -> int:
    if args.spec.startswith("random:"):
        if args.seed is None:
            raise UsageError("random graphs need --seed")
        n, prob = args.spec.split(":", 1)[1].split(",")
        g = gnp(int(n), float(prob), args.seed)
    else:
        g = named_graph(args.spec)
    for _ in range(args.mycielski):
        g = mycielskian(g)
    print(serialize_graph6(g))
    return 0


def cmd_analyze(args) -> int:
    limits = _limits(args)
    for g in _graphs(args.graph):
        fields = [f"n={g.n}", f"m={g.m}"]
        fields.append(f"chi={_fmt(chromatic_number(g, limits))}")
        fields.append(f"omega={_fmt(clique_number(g, limits))}")
        fields.append(f"degeneracy={degeneracy(g)[0] if g.n else 0}")
        for d in range(2, args.max_d + 1):
            res = tau_d(g, d, limits)
            fields.append(f"tau_{d}={_fmt(res if isinstance(res, Unknown) else res[0])}")
        print(" ".join(fields))
    return 0


def cmd_detect(args) -> int:
    h = realize(parse_pattern(args.pattern))
    limits = _limits(args)
    for g in _graphs(args.graph):
        res = induced_contains(g, h, limits)
        if isinstance(res, Unknown):
            print("unknown")
        elif res is None:
            print("not found")
        else:
            print("found " + " ".join(f"{i}->{v}" for i, v in enumerate(res)))
    return 0


def _emit_cert(value, cert) -> None:
    out = cert.to_json() if cert is not None else None
    print(json.dumps({"value": value, "certificate": out}, sort_keys=True))


def cmd_find_balloon(args) -> int:
    for g in _graphs(args.graph):
        res = max_balloon_value(g, args.p, args.t, _limits(args))
        if isinstance(res, Unknown):
            print(json.dumps({"unknown": True, "lower": res.lower}))
        else:
            _emit_cert(*res)
    return 0


def cmd_find_biclique(args) -> int:
    for g in _graphs(args.graph):
        res = max_biclique_value(g, args.t, _limits(args))
        if isinstance(res, Unknown):
            print(json.dumps({"unknown": True, "lower": res.lower}))
        else:
            _emit_cert(*res)
    return 0


def cmd_classify(args) -> int:
    limits = _limits(args)
    tree = realize(parse_pattern(args.tree))
    for g in _graphs(args.graph):
        b = bounds.beta_T(tree, args.t)
        f1 = in_F1(g, args.t, limits)
        f2 = in_F2(g, args.t, b, limits)
        print(f"M={_fmt(in_M(g, limits))} L={_fmt(in_L(g, limits))} "
              f"F1={_fmt(f1)} F2={_fmt(f2)} FT={_fmt(f1 if f1 is True else f2)}")
    return 0


FORMULAS = {
    "lemma1": (bounds.lemma1_rhs, ["p", "q", "s", "t"]),
    "thm8": (bounds.thm8_f, ["d", "p", "t"]),
    "thm9": (bounds.thm9_f, ["d", "p", "t", "s"]),
    "thm10": (bounds.thm10_f, ["d", "p", "t"]),
    "thm11": (None, ["d", "tree", "t"]),
    "cascade": (bounds.cascade_f1, ["s", "d", "t"]),
    "beta_h": (bounds.beta_H, ["s", "p", "t"]),
    "beta_t": (None, ["tree", "t"]),
    "scott": (bounds.scott_degeneracy_bound, ["h_size", "spread", "height", "t"]),
    "randerath": (bounds.randerath_bound, ["omega"]),
}


def cmd_bounds(args) -> int:
    fn, names = FORMULAS[args.formula]
    params = {}
    for name in names:
        val = getattr(args, name)
        if val is None:
            if args.formula == "thm9" and name == "s":
                val = 3
            else:
                raise UsageError(f"{args.formula} needs --{name.replace('_', '-')}")
        params[name] = val
    if args.formula in ("thm11", "beta_t"):
        tree = realize(parse_pattern(params["tree"]))
        if args.formula == "thm11":
            value = bounds.thm11_f(params["d"], tree, params["t"])
        else:
            value = bounds.beta_T(tree, params["t"])
    else:
        value = fn(**params)
    if args.json:
        rec = bounds.record(args.formula, params, value, args.max_digits)
        if args.formula in ("thm9", "cascade"):
            rec["f0"] = "identity"
        print(json.dumps(rec, sort_keys=True))
    else:
        print(bounds.render(value, args.max_digits))
    return 0


def cmd_verify(args) -> int:
    params = json.loads(args.params) if args.params else {}
    if "grid" in params:
        params["grid"] = [tuple(x) for x in params["grid"]]
    corpus = parse_corpus(args.corpus, args.filter)
    report = run_check(args.check, corpus, params, _limits(args))
    text = report.to_json(include_timing=not args.no_timing)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    print(f"{report.check_name}: checked={report.checked} skipped={report.skipped_unknown} "
          f"violations={len(report.violations)}", file=sys.stderr)
    return 1 if report.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polychi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_opts(p):
        p.add_argument("--node-budget", type=int, default=5_000_000)
        p.add_argument("--time-budget", type=float, default=None)

    p = sub.add_parser("gen", help="print a generated graph in graph6")
    p.add_argument("spec", help="cycle:5, kdt:2,3, multipartite:1,2,3, t1:4, random:n,prob, ...")
    p.add_argument("--seed", type=int)
    p.add_argument("--mycielski", type=int, default=0, help="apply the Mycielski construction N times")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="chi, omega, degeneracy and tau_d")
    p.add_argument("graph", help="graph6 string, named graph, or file")
    p.add_argument("--max-d", type=int, default=2)
    solver_opts(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("detect", help="look for an induced pattern")
    p.add_argument("graph")
    p.add_argument("--pattern", required=True)
    solver_opts(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("find-balloon", help="maximum-value (p,t)-balloon")
    p.add_argument("graph")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    solver_opts(p)
    p.set_defaults(func=cmd_find_balloon)

    p = sub.add_parser("find-biclique", help="maximum-value t-biclique")
    p.add_argument("graph")
    p.add_argument("-t", type=int, required=True)
    solver_opts(p)
    p.set_defaults(func=cmd_find_biclique)

    p = sub.add_parser("classify", help="membership in M, L, F1, F2")
    p.add_argument("graph")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--tree", default="t1:4")
    solver_opts(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="evaluate a bound formula exactly")
    p.add_argument("formula", choices=sorted(FORMULAS))
    for flag in ("p", "q", "s", "t", "d"):
        p.add_argument(f"-{flag}", type=int, dest=flag)
    p.add_argument("--tree")
    p.add_argument("--h-size", type=int, dest="h_size")
    p.add_argument("--spread", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--omega", type=int)
    p.add_argument("--max-digits", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a corpus check and write a report")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--corpus", required=True, help="exhaustive:N | random:n,p,count,seed | named:a;b | file:PATH")
    p.add_argument("--filter", action="append", default=[])
    p.add_argument("--params", help="JSON object of check parameters")
    p.add_argument("--out")
    p.add_argument("--no-timing", action="store_true", help="zero wall_time_ms for byte-stable reports")
    solver_opts(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
