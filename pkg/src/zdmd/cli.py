"""Command line front end: ``zdmd {zdg,bs,md,verify,corpus}``."""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .constructions import RegimeError, build_labeled_bs, certified_dimension
from .corpus import run_corpus
from .graph import (Graph, barycentric_subdivision, bfs_all_pairs, from_json, is_connected,
                    to_dot, to_json_dict)
from .resolving import (DimensionReport, DisconnectedGraphError, certify, default_budget,
                        equidistant_family_bound, greedy_upper_bound, min_resolving_bnb,
                        min_resolving_exhaustive)
from .ring import is_prime, split_semiprime, zero_divisor_graph
from .verify import VerificationReport, verify_theorem


def parse_range(text: str) -> list[int]:
    """``"7"``, ``"2..5"`` or ``"3,5,7"``."""
    out: list[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _graph_text(g: Graph, fmt: str, title: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return json.dumps(to_json_dict(g)) + "\n"
    lines = [f"{title}: {g.n} vertices, {g.edge_count} edges"]
    if g.edge_count == 0:
        lines.append("empty graph (no edges)" if g.n else "empty graph (no vertices)")
    lines += [f"  {g.name(u)} -- {g.name(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def bs_graph(n: int) -> Graph:
    """BS(Γ(Z_n)), with partition labels when n is a product of two distinct primes."""
    pq = split_semiprime(n)
    if pq is not None:
        return build_labeled_bs(*pq)[0]
    return barycentric_subdivision(zero_divisor_graph(n))[0]


def cmd_zdg(args) -> int:
    g = zero_divisor_graph(args.n)
    _emit(_graph_text(g, args.format, f"Γ(Z_{args.n})"), args.out)
    return 0


def cmd_bs(args) -> int:
    g = bs_graph(args.n)
    _emit(_graph_text(g, args.format, f"BS(Γ(Z_{args.n}))"), args.out)
    return 0


def _report_json(g: Graph, rep: DimensionReport) -> dict:
    out = {"lower": rep.lower, "upper": rep.upper, "exact": rep.exact, "method": rep.method,
           "nodes": rep.nodes, "elapsed": rep.elapsed, "notes": rep.notes,
           "witness": None if rep.witness is None else list(rep.witness)}
    if rep.witness:
        out["certificate"] = json.loads(certify(bfs_all_pairs(g), rep.witness).to_json())
        if g.labels:
            out["witness_labels"] = [g.name(v) for v in rep.witness]
    return out


def cmd_md(args) -> int:
    if args.file:
        with open(args.file) as f:
            g = from_json(f.read())
    else:
        g = bs_graph(args.n) if args.graph == "bs" else zero_divisor_graph(args.n)
    if not is_connected(g):
        print("error: graph is disconnected; metric dimension is not defined here", file=sys.stderr)
        return 1
    t0 = time.perf_counter()
    if args.mode == "exhaustive":
        rep = min_resolving_exhaustive(g, budget=args.budget)
    elif args.mode == "bnb":
        rep = min_resolving_bnb(g, budget=args.budget)
    else:
        rep = _bounds_only(g, args.n if not args.file else None)
    rep.elapsed = time.perf_counter() - t0
    if args.format == "json":
        _emit(json.dumps(_report_json(g, rep)) + "\n", args.out)
    else:
        text = rep.summary(g) + "\n"
        if rep.notes:
            text += "notes: " + "; ".join(rep.notes) + "\n"
        _emit(text, args.out)
    return 0 if rep.exact else 2


def _bounds_only(g: Graph, n: int | None) -> DimensionReport:
    """No search: the certificate for labelled BS(Γ(Z_pq)), else greedy over a trivial lower bound."""
    pq = split_semiprime(n) if n is not None else None
    if pq is not None and g.labels:
        rep = certified_dimension(*pq)
        if rep is not None:
            return rep
    dm = bfs_all_pairs(g)
    upper = greedy_upper_bound(g, dm)
    notes = []
    lower = 1 if g.n > 1 else 0
    fam = [v for v, l in (g.labels or {}).items() if l.startswith("a_")]
    if pq is not None and len(fam) > 1:
        lower = max(lower, equidistant_family_bound(g, fam, dm))
        notes.append("lower bound from the A family")
    return DimensionReport(lower, len(upper), tuple(upper), "greedy", notes=notes)


def _pairs(p_range: list[int], q_range: list[int]) -> list[tuple[int, int]]:
    return [(p, q) for p in sorted(set(p_range)) if is_prime(p)
            for q in sorted(set(q_range)) if is_prime(q) and q > p]


def cmd_verify(args) -> int:
    pairs = _pairs(parse_range(args.p), parse_range(args.q))
    if not pairs:
        print("error: no prime pairs p < q in the given ranges", file=sys.stderr)
        return 2
    rep = VerificationReport()
    for p, q in pairs:
        rep.extend(verify_theorem(p, q, args.mode, budget=args.budget))
    _emit(rep.to_csv() if args.format == "csv" else rep.to_text(), args.out)
    for r in rep.failures():
        print(f"FAILED ({r.p},{r.q}) {r.check}: {r.detail}", file=sys.stderr)
    return 0 if rep.ok else 1


def cmd_corpus(args) -> int:
    s = run_corpus(seed=args.seed, graphs=args.graphs, trees=args.trees)
    lines = [f"seed {args.seed}"] + [f"  {k}: {v} checks" for k, v in sorted(s.checks.items())]
    lines += [f"  FAIL {f}" for f in s.failures]
    lines.append("ok" if not s.failures else f"{len(s.failures)} failures")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if not s.failures else 1


def _n_arg(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be >= 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="search budget (subsets tested / nodes expanded); env ZDMD_BUDGET")
    common.add_argument("--out", help="write output to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="zdmd", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zdg", parents=[common], help="zero-divisor graph of Z_n")
    p.add_argument("n", type=_n_arg)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_zdg)

    p = sub.add_parser("bs", parents=[common], help="barycentric subdivision of Γ(Z_n)")
    p.add_argument("n", type=_n_arg)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_bs)

    p = sub.add_parser("md", parents=[common], help="metric dimension")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=_n_arg)
    src.add_argument("--file", help="graph in JSON format")
    p.add_argument("--graph", choices=["bs", "zdg"], default="bs",
                   help="with --n: BS(Γ(Z_n)) (default) or Γ(Z_n)")
    p.add_argument("--mode", choices=["exhaustive", "bnb", "bounds"], default="bnb")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_md)

    p = sub.add_parser("verify", parents=[common], help="check the BS(Γ(Z_pq)) results")
    p.add_argument("--p", required=True, help="prime or range, e.g. 7 or 2..5")
    p.add_argument("--q", required=True, help="prime or range, e.g. 11 or 3..13")
    p.add_argument("--mode", choices=["fast", "full"], default="fast")
    p.add_argument("--format", choices=["csv", "text"], default="csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="random-graph cross-checks")
    p.add_argument("--graphs", type=int, default=200)
    p.add_argument("--trees", type=int, default=100)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None:
        args.budget = default_budget()
    elif args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (DisconnectedGraphError, RegimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
