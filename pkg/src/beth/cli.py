"""Command-line front end: ``beth report``, ``beth suite``, ``beth gen``.

Exit codes: 0 success, 1 a suite check failed, 2 bad input (parse error,
disconnected graph, unknown check id, unreadable corpus), 3 an oracle ran
out of budget while producing a report.
"""

from __future__ import annotations

import argparse
import sys

from .characteristics import report, reports_to_csv
from .graph import GenerationError, Graph6Error, GraphError, parse_edge_list, parse_graph6
from .oracles import CHROMATIC_MAX_N, MINOR_MAX_N
from .suite import (
    ALL_CHECKS,
    DEFAULT_CHECKS,
    GeneratorSpec,
    SuiteConfig,
    SuiteError,
    atlas_corpus,
    generate_corpus,
    results_to_csv,
    results_to_json,
    run_suite,
    summarize,
)

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _generator(args) -> GeneratorSpec:
    text = args.generator
    if args.seed is not None:
        text = ",".join(p for p in text.split(",") if not p.strip().startswith("seed=")) + f",seed={args.seed}"
    return GeneratorSpec.parse(text)


def cmd_report(args) -> int:
    if args.graph6 is not None:
        g = parse_graph6(args.graph6)
    elif args.edge_list is not None:
        g = parse_edge_list(_read_text(args.edge_list))
    else:
        g = parse_graph6(sys.stdin.read().strip())
    rep = report(g, with_oracles=args.oracles, budget=args.budget, detail=args.detail)
    text = reports_to_csv([rep]) if args.format == "csv" else rep.to_json() + "\n"
    _emit(text, args.out)
    if args.oracles:
        missing = []
        if rep.chi is None and g.n <= CHROMATIC_MAX_N:
            missing.append("chi")
        if g.n <= MINOR_MAX_N:
            missing += [k for k in ("hadwiger", "planar") if getattr(rep, k) is None]
        if missing:
            print(f"beth: oracle budget exhausted for {', '.join(missing)}", file=sys.stderr)
            return EXIT_BUDGET
    return 0


def cmd_suite(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else DEFAULT_CHECKS
    cfg = SuiteConfig(
        corpus_path=args.corpus,
        generator=_generator(args) if args.generator else None,
        graphs=tuple(args.graph6) if args.graph6 else None,
        checks=checks,
        budget=args.budget,
        fmt=args.format,
        out=args.out,
        workers=args.workers,
    )
    results = run_suite(cfg)
    text = results_to_csv(results) if cfg.fmt == "csv" else results_to_json(results)
    _emit(text, cfg.out)
    counts = summarize(results)
    print(f"summary: pass={counts['pass']} fail={counts['fail']} "
          f"skipped-budget={counts['skipped-budget']}", file=sys.stderr)
    for r in results:
        if r.status == "fail":
            print(f"FAIL {r.check} {r.graph6} {r.detail}", file=sys.stderr)
    return EXIT_FAIL if counts["fail"] else 0


def cmd_gen(args) -> int:
    if args.atlas is not None:
        _emit(atlas_corpus(args.atlas), args.out)
    else:
        _emit(generate_corpus(_generator(args)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="beth", description="Graph characteristics and their bounds on chi and h.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="characteristics report for one graph")
    src = r.add_mutually_exclusive_group()
    src.add_argument("--graph6", help="graph in graph6 (default: read graph6 from stdin)")
    src.add_argument("--edge-list", help="edge-list file, or - for stdin")
    r.add_argument("--oracles", action=argparse.BooleanOptionalAction, default=False,
                   help="compute exact chi, h and planarity")
    r.add_argument("--detail", action="store_true", help="include cycles, solids and witnesses (JSON)")
    r.add_argument("--budget", type=int, help="oracle node budget (default: $BETH_BUDGET or built-in)")
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("--out", help="write here instead of stdout")
    r.set_defaults(func=cmd_report)

    s = sub.add_parser("suite", help="run theorem checks over a corpus")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", help="graph6 file, one graph per line, # comments allowed")
    src.add_argument("--generator", help="random corpus spec n=..,p=..,count=..,seed=..")
    src.add_argument("--graph6", action="append", help="single graph (repeatable)")
    s.add_argument("--seed", type=int, help="generator seed (overrides seed= in the generator spec)")
    s.add_argument("--checks", help=f"comma-separated check ids; known: {', '.join(ALL_CHECKS)}")
    s.add_argument("--budget", type=int, help="oracle node budget per search")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    s.add_argument("--workers", type=int, default=1, help="worker processes (results stay in corpus order)")
    s.set_defaults(func=cmd_suite)

    gsub = sub.add_parser("gen", help="write a seeded random connected corpus in graph6")
    src = gsub.add_mutually_exclusive_group(required=True)
    src.add_argument("--generator", help="n=..,p=..,count=..,seed=..")
    src.add_argument("--atlas", type=int, metavar="N", help="all connected graphs on at most N <= 7 vertices")
    gsub.add_argument("--seed", type=int, help="overrides seed= in the generator spec")
    gsub.add_argument("--out")
    gsub.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"beth: graph6 parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphError, SuiteError, OSError) as exc:
        print(f"beth: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationError as exc:
        print(f"beth: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
