"""
Command-line front end.

stdout always carries JSON (or JSON lines); human summaries go to stderr.
Exit codes: 0 success, 1 a claim FAILed, 2 usage or input error, 3 a solver
budget was exhausted. ``--seed`` defaults to 0. ``HYPERSTAB_BUDGET`` sets the
default solver node budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as con
from . import harness
from .core import KPartiteHypergraph, load, save
from .errors import BudgetExceeded, HypergraphError
from .links import extension_lemma_census
from .report import archive_counterexamples, instance_hash
from .shifting import shift, shift_closure, shift_trace
from .solvers import default_budget, max_matching, min_vertex_cover

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit_graph(H: KPartiteHypergraph, out: str | None) -> None:
    if out:
        save(H, out)
        print(f"wrote {H.e} edges to {out}", file=sys.stderr)
    else:
        print(H.dumps())


def _read(path: str) -> KPartiteHypergraph:
    try:
        return load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_gen(args) -> int:
    if args.kind == "extremal":
        H = con.extremal_hknm(args.k, args.n, args.m)
    elif args.kind == "complete":
        H = con.complete(args.k, args.sizes or args.n)
    elif args.kind == "random":
        sizes = args.sizes or [args.n] * args.k
        H = con.random_hypergraph(args.k, sizes, args.edges, args.seed)
    elif args.kind == "min-degree":
        H = con.random_min_degree(args.k, args.n, args.delta, args.seed)
    elif args.kind == "tight-intersecting":
        sizes = args.sizes or [args.n] * 3
        H = con.lemma24_tight_family(*sizes)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(args.kind)
    _emit_graph(H, args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    H = _read(args.file)
    budget = args.budget if args.budget is not None else default_budget()
    want_nu, want_tau, want_pm = args.nu, args.tau, args.pm
    if not (want_nu or want_tau or want_pm):
        want_nu = want_tau = True
    out: dict = {}
    if want_nu or want_pm:
        M = max_matching(H, budget)
        if want_nu:
            out["nu"] = M.size
            out["matching"] = [list(t) for t in M.edges]
        if want_pm:
            perfect = M.size == min(H.sizes) and len(set(H.sizes)) == 1
            out["perfect_matching"] = [list(t) for t in M.edges] if perfect else None
    if want_tau:
        C = min_vertex_cover(H, budget)
        out["tau"] = C.size
        out["cover"] = [list(v) for v in sorted(C.vertices)]
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_shift(args) -> int:
    H = _read(args.file)
    if args.pair:
        c, x, y = args.pair
        G = shift(H, (c, x), (c, y))
    elif args.closure or args.trace:
        if args.trace:
            steps = shift_trace(H)
            Path(args.trace).write_text(json.dumps(
                {"steps": [{"pair": None if p is None else [list(p[0]), list(p[1])], "graph": g.to_dict()}
                           for p, g in steps]},
                separators=(",", ":"),
            ) + "\n")
            G = steps[-1][1]
        else:
            G = shift_closure(H)
    else:
        raise UsageError("shift needs --closure, --trace or --pair")
    _emit_graph(G, args.output)
    return EXIT_OK


def cmd_links(args) -> int:
    report = extension_lemma_census()
    print(json.dumps({"status": report.status, **report.details}, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_FAIL


def _single_report(args):
    cid = args.claim
    s, j = args.seed, args.jobs
    budget = default_budget()
    n, m = args.n, args.m
    if cid == "hknm":
        return harness.verify_construction(n or 6, args.k or 3)
    if cid == "thm-1.1":
        return harness.verify_berge(args.k or 3, n or 3)
    if cid == "thm-1.2":
        return harness.verify_aharoni_howard(n or 3, m or 2, args.trials or 1000, s, args.exhaustive, budget, j)
    if cid == "lem-2.1":
        return harness.verify_extension_census()
    if cid == "lem-2.5":
        return harness.verify_rainbow_pairs(n or 3)
    if cid == "thm-2.2":
        return harness.verify_rainbow_theorem(n or 3, m or 2, args.trials or 500, s, args.exhaustive, j)
    if cid == "lem-2.3":
        return harness.verify_shift_monotone(n or 3, args.edges or 12, args.trials or 1000, s, budget, j)
    if cid == "lem-2.4":
        sizes = args.sizes or [n or 5] * 3
        return harness.verify_intersecting_stability(*sizes, args.trials or 2000, s, budget, j, args.exhaustive)
    if cid == "lem-3.1":
        return harness.verify_shifted_stability(n or 4, m or 2, args.trials or 2400, s, budget, j)
    if cid == "thm-1.3":
        return harness.verify_main_stability(n or 4, m or 2, args.trials or 1000, s, budget, j)
    if cid == "lem-2.6":
        return harness.verify_small_matching_stability(n or 5, m or 2, args.trials or 1000, s, budget, j)
    if cid == "lem-3.3":
        return harness.verify_near_perfect_stability(n or 3, args.trials or 1000, s, budget, j)
    if cid == "thm-3.2":
        return harness.verify_daykin_haggkvist(n or 3, args.trials or 1000, s, budget, j)
    if cid == "conj-1.4":
        return harness.conjecture_search(n or 3, m or 2, args.budget if args.budget is not None else 10_000, s)
    if cid == "oracle":
        return harness.solver_cross_check(n or 3, args.edges, args.trials or 500, s, args.exhaustive, j)
    raise UsageError(f"unknown claim {cid!r}; known: all, {', '.join(sorted(harness.CLAIMS))}")


def cmd_verify(args) -> int:
    if args.claim == "all":
        reports = []
        for cid, fn in harness.small_suite(args.seed, args.jobs):
            r = fn()
            reports.append(r)
            _report_line(r, args.archive)
    else:
        reports = [_single_report(args)]
        _report_line(reports[0], args.archive)
    return EXIT_FAIL if any(not r.ok for r in reports) else EXIT_OK


def _report_line(report, archive) -> None:
    print(report.to_json(), flush=True)
    print(
        f"{report.claim_id:9s} {report.status:12s} tested={report.instances_tested} "
        f"skipped={report.skipped} counterexamples={len(report.counterexamples)}",
        file=sys.stderr,
    )
    if archive and report.counterexamples:
        archive_counterexamples(report, archive)


def cmd_search(args) -> int:
    report = harness.conjecture_search(args.n, args.m, args.budget, args.seed)
    archive = Path(args.archive) if args.archive else None
    files = []
    if archive:
        archive.mkdir(parents=True, exist_ok=True)
        files = [str(p) for p in archive_counterexamples(report, archive)]
        for cand in report.details.get("candidates", []):
            path = archive / f"candidate-{instance_hash(cand)}.json"
            path.write_text(json.dumps(cand, sort_keys=True, separators=(",", ":")) + "\n")
            files.append(str(path))
    summary = {
        "claim_id": report.claim_id,
        "status": report.status,
        "params": report.params,
        "seed": report.seed,
        "instances_tested": report.instances_tested,
        "counterexamples": len(report.counterexamples),
        "candidates": len(report.details.get("candidates", [])),
        "best_edges_with_tau_gt_m": report.details.get("best_edges_with_tau_gt_m"),
        "extremal_edges": report.details.get("extremal_edges"),
        "archive": sorted(files),
    }
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperstab", description=__doc__.splitlines()[1])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a hypergraph as JSON")
    g.add_argument("kind", choices=["extremal", "complete", "random", "min-degree", "tight-intersecting"])
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--sizes", type=_sizes)
    g.add_argument("--edges", type=int, default=0)
    g.add_argument("--delta", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="matching number, cover number, perfect matching")
    s.add_argument("file")
    s.add_argument("--nu", action="store_true")
    s.add_argument("--tau", action="store_true")
    s.add_argument("--pm", action="store_true")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_solve)

    sh = sub.add_parser("shift", help="apply shifts")
    sh.add_argument("file")
    sh.add_argument("--closure", action="store_true")
    sh.add_argument("--pair", type=_sizes, help="class,x,y")
    sh.add_argument("--trace", help="write the full shift sequence to this file")
    sh.add_argument("-o", "--output")
    sh.set_defaults(func=cmd_shift)

    lk = sub.add_parser("links", help="link-system census")
    lk.add_argument("what", choices=["census"])
    lk.set_defaults(func=cmd_links)

    v = sub.add_parser("verify", help="run a claim suite; JSON lines on stdout")
    v.add_argument("claim")
    v.add_argument("--small", action="store_true", help="pinned parameter set (used with 'all')")
    v.add_argument("--k", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--sizes", type=_sizes)
    v.add_argument("--edges", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--budget", type=int)
    v.add_argument("--exhaustive", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--archive", help="directory for counterexample files")
    v.set_defaults(func=cmd_verify)

    se = sub.add_parser("search", help="counterexample search")
    se.add_argument("what", choices=["conjecture"])
    se.add_argument("--n", type=int, default=3)
    se.add_argument("--m", type=int, default=2)
    se.add_argument("--budget", type=int, default=10_000)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--archive")
    se.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, HypergraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
