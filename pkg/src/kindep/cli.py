"""Command-line front end.

Exit codes: 0 success, 1 a verification or report check failed, 2 bad
usage or unparsable input, 3 the enumeration budget was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .formats import (
    FormatError,
    edgelist_decode,
    graph6_decode,
    graph6_encode,
    read_graph6_file,
)
from .graph import Graph, GraphError
from .kindpoly import k_independence_polynomial
from .polynomial import compare_near_infinity, compare_near_zero, dominance
from .search import (
    DEFAULT_BUDGET,
    ClassSpec,
    Objective,
    Verdict,
    explore_least,
    find_optimum,
    find_optimum_in,
    reports_csv,
)
from .verify import Theorem, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- input handling ----------------------------------------------------------
def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", action="append", default=[],
                   help="graph6 string (repeatable)")
    p.add_argument("--graph6-file", help="file with one graph6 per line")
    p.add_argument("--edgelist-file", help="edge list: 'n m' then 'u v' lines")
    p.add_argument("--construction", choices=[f.value for f in C.Family])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--deleted", type=int,
                   help="edges removed by the thm3-ls construction")
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"),
                   help="edge moved by the edge-move construction")
    p.add_argument("--yz", type=int, nargs=2, metavar=("Y", "Z"),
                   help="isolated endpoints for the edge-move construction")


def _need(args, *names: str) -> list[int]:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--construction {args.construction} needs "
                         + " ".join(f"--{n}" for n in missing))
    return [getattr(args, n) for n in names]


def build_construction(args) -> list[Graph]:
    fam = C.Family(args.construction)
    if fam is C.Family.LEX:
        return [C.lex_graph(*_need(args, "n", "m"))]
    if fam is C.Family.TURAN:
        return [C.turan_graph(*_need(args, "n", "k"))]
    if fam is C.Family.THM2:
        return [C.theorem2_graph(*_need(args, "n", "m"))]
    if fam is C.Family.THM3_LS:
        return [C.theorem3_ls_graph(*_need(args, "n", "deleted"))]
    if fam is C.Family.THM3_FS:
        return [C.theorem3_fs_graph(*_need(args, "a", "b"))]
    if fam is C.Family.THM4:
        return [C.theorem4_graph(*_need(args, "n", "m"))]
    if fam is C.Family.THM5_PAIR:
        return list(C.theorem5_pair(*_need(args, "k", "l", "n")))
    if fam is C.Family.THM6_PAIR:
        return list(C.theorem6_pair(*_need(args, "k", "n")))
    if fam is C.Family.EDGE_MOVE:
        if len(args.graph6) != 1 or args.edge is None or args.yz is None:
            raise UsageError("edge-move needs one --graph6, --edge and --yz")
        h1 = graph6_decode(args.graph6[0])
        return [h1, C.edge_move(h1, tuple(args.edge), *args.yz)]
    raise UsageError(f"unknown construction {fam}")


def load_graphs(args) -> list[Graph]:
    sources = [bool(args.graph6) and args.construction != "edge-move",
               bool(args.graph6_file), bool(args.edgelist_file),
               bool(args.construction)]
    if sum(sources) != 1:
        raise UsageError("give exactly one input source: --graph6, "
                         "--graph6-file, --edgelist-file or --construction")
    if args.construction:
        return build_construction(args)
    if args.graph6:
        out = []
        for i, s in enumerate(args.graph6, 1):
            try:
                out.append(graph6_decode(s))
            except FormatError as exc:
                raise FormatError(f"--graph6 #{i}: {exc}") from exc
        return out
    if args.graph6_file:
        return read_graph6_file(args.graph6_file)
    return [edgelist_decode(Path(args.edgelist_file).read_text())]


# -- commands ----------------------------------------------------------------
def cmd_poly(args) -> int:
    k = args.k or 2
    rows = []
    for g in load_graphs(args):
        p = k_independence_polynomial(g, k)
        rows.append({"graph6": graph6_encode(g), "n": g.n, "m": g.m, "k": k,
                     "polynomial": p.to_json(), "degree": p.degree})
        if args.format == "text":
            label = "independence number" if k == 2 else f"r_G (k={k})"
            print(f"{graph6_encode(g)}  n={g.n} m={g.m}")
            print(f"  I_{k} = {p}")
            print(f"  coefficients = {list(p.coeffs)}")
            print(f"  degree = {p.degree} ({label})")
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        print("graph6,n,m,k,degree,coefficients")
        for r in rows:
            print(f"{r['graph6']},{r['n']},{r['m']},{r['k']},{r['degree']},"
                  f"{' '.join(r['polynomial'])}")
    return EXIT_OK


def cmd_compare(args) -> int:
    k = args.k or 2
    graphs = load_graphs(args)
    if len(graphs) != 2:
        raise UsageError(f"compare needs exactly two graphs, got {len(graphs)}")
    g, h = graphs
    if (g.n, g.m) != (h.n, h.m):
        print(f"warning: comparing different classes ({g.n},{g.m}) and "
              f"({h.n},{h.m})", file=sys.stderr)
    pg, ph = k_independence_polynomial(g, k), k_independence_polynomial(h, k)
    v = dominance(pg, ph)
    near0, near_inf = compare_near_zero(pg, ph), compare_near_infinity(pg, ph)
    if args.format == "json":
        print(json.dumps({"k": k, "f": {"graph6": graph6_encode(g),
                                         "polynomial": pg.to_json()},
                          "g": {"graph6": graph6_encode(h),
                                "polynomial": ph.to_json()},
                          "verdict": v.to_dict(),
                          "near_zero": near0.name,
                          "near_infinity": near_inf.name}, indent=2))
    else:
        print(f"f = I_{k}({graph6_encode(g)}) = {pg}")
        print(f"g = I_{k}({graph6_encode(h)}) = {ph}")
        print(f"verdict: {v}")
        print(f"near 0: f {near0.name} g; near infinity: f {near_inf.name} g")
    return EXIT_OK


def _write_reports(reports, args) -> None:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    payload = ([r.to_dict() for r in reports] if len(reports) > 1
               else reports[0].to_dict())
    (out / "report.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n")
    (out / "summary.csv").write_text(reports_csv(reports))


def _check_reports(reports) -> bool:
    ok = True
    for r in reports:
        for problem in r.validate():
            print(f"report check failed: {problem}", file=sys.stderr)
            ok = False
    return ok


def cmd_search(args) -> int:
    objective = Objective(args.objective)
    if args.graph6_file:
        report = find_optimum_in(read_graph6_file(args.graph6_file),
                                 args.k or 2, objective, timing=args.timing)
    else:
        if args.n is None or args.m is None:
            raise UsageError("search needs --n and --m (or --graph6-file)")
        spec = ClassSpec(args.n, args.m, args.k or 2, objective)
        report = find_optimum(spec, dedup=args.dedup, jobs=args.jobs,
                              budget=args.budget, timing=args.timing)
    ok = _check_reports([report])
    _write_reports([report], args)
    if args.format == "json":
        print(report.to_json(), end="")
    elif args.format == "csv":
        print(reports_csv([report]), end="")
    else:
        print(_render_report(report))
    if report.verdict is Verdict.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_OK if ok else EXIT_FAIL


def _render_report(r) -> str:
    s = r.spec
    lines = [f"S({s.n},{s.m}) k={s.k} {s.objective.value}: {r.verdict.value}"]
    if r.witness is not None:
        lines.append(f"  witness {graph6_encode(r.witness)}: {r.witness_poly}")
        if len(r.cowitnesses) > 1:
            lines.append("  co-witnesses: " + " ".join(
                graph6_encode(g) for g in r.cowitnesses))
    if r.refutation is not None:
        for g, p in zip(r.refutation, r.refutation_polys):
            lines.append(f"  refutation {graph6_encode(g)}: {p}")
        lines.append(f"  {r.crossing}")
    if r.message:
        lines.append(f"  {r.message}")
    lines.append(f"  {r.class_size} graphs, {r.distinct_polynomials} distinct "
                 f"polynomials" + (f", {r.dedup_count} isomorphism classes"
                                   if r.dedup_count is not None else ""))
    return "\n".join(lines)


def cmd_verify(args) -> int:
    tag = Theorem(args.theorem)
    params: dict = {}
    if tag is Theorem.THM1:
        params = {"n": args.n or 6, "jobs": args.jobs}
    elif tag is Theorem.THM2:
        params = {"n": args.n or 6, "jobs": args.jobs}
        if args.m is not None:
            params["ms"] = args.m
    elif tag is Theorem.THM3:
        params = {"jobs": args.jobs}
        if args.n is not None:
            params["ns"] = [args.n]
    elif tag is Theorem.THM4:
        params = {"max_n": args.max_n or args.n or 7, "jobs": args.jobs}
    elif tag is Theorem.THM5:
        params = {"k": args.k or 3, "l": args.l or 3, "n": args.n or 13}
    elif tag is Theorem.THM6:
        params = {"k": args.k or 3, "n": args.n or 7, "jobs": args.jobs,
                  "search_budget": args.budget}
    elif tag is Theorem.LEMMA4:
        params = {"trials": args.trials, "max_n": args.max_n or 10,
                  "seed": args.seed}
    rep = verify_theorem(tag, **params)
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(rep.render(verbose=args.verbose))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_construct(args) -> int:
    for g in build_construction(args):
        print(graph6_encode(g))
    return EXIT_OK


def cmd_explore(args) -> int:
    reports = explore_least(args.max_n, args.k or 2, budget=args.budget,
                            jobs=args.jobs)
    ok = _check_reports(reports)
    if args.out:
        _write_reports(reports, args)
    print(reports_csv(reports), end="")
    missing = [r for r in reports if r.verdict is Verdict.NOT_EXISTS]
    skipped = [r for r in reports if r.verdict is Verdict.BUDGET_EXCEEDED]
    print(f"# {len(reports)} classes, {len(missing)} without an optimally "
          f"least graph, {len(skipped)} over budget; an empty list is "
          f"evidence at this scale, not a proof", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kindep",
        description="Exact (k-)independence polynomials and optimal graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json", "csv")):
        p.add_argument("--k", type=int, help="clique order (default 2)")
        p.add_argument("--format", choices=fmt, default="text")

    p = sub.add_parser("poly", help="print I_k of the input graph(s)")
    _add_graph_inputs(p)
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("compare", help="compare I_k of two graphs on [0,inf)")
    _add_graph_inputs(p)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("search", help="decide optimality over S(n,m)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--objective", choices=[o.value for o in Objective],
                   default="greatest")
    p.add_argument("--graph6-file", help="use these graphs as the class")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true",
                   help="record wall time (output is then not reproducible)")
    p.add_argument("--out", default=".",
                   help="directory for report.json and summary.csv")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check one theorem at small scale")
    p.add_argument("theorem", choices=[t.value for t in Theorem])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, nargs="+")
    p.add_argument("--l", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=300_000)
    p.add_argument("--verbose", "-v", action="store_true")
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit a construction as graph6")
    _add_graph_inputs(p)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("explore", help="look for classes with no "
                                       "optimally-least graph")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.add_argument("--out")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct" and not args.construction:
        parser.error("construct needs --construction")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
