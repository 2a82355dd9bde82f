"""Command-line front end.

Subcommands: ``analyze`` one graph, ``sweep`` a corpus or exhaustive range,
``search`` for counterexamples to one claim, ``verify`` a named suite.

Exit codes: 0 clean, 1 a VIOLATION verdict or counterexample was found,
2 usage or structural error (bad graph6 input, unknown claim or suite).

Guard overrides via environment: STINGYCOLOR_OPTIMAL_GUARD and
STINGYCOLOR_FULL_GUARD (vertex-count ceilings for optimal-coloring work and
full coloring enumeration).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .graphs import Graph, GraphFormatError, EXHAUSTIVE_MAX_N, generate, parse_graph6
from .coloring import Guards, GuardExceededError
from .bounds import VerificationParams, full_report, report_violations
from . import suites as suites_mod

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


def _guards_from_env() -> Guards:
    opt = int(os.environ.get("STINGYCOLOR_OPTIMAL_GUARD", Guards.optimal))
    full = int(os.environ.get("STINGYCOLOR_FULL_GUARD", Guards.full))
    return Guards(optimal=opt, full=full)


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _parse_t_list(text: str) -> tuple[int, ...]:
    """Half-integer slacks, exactly: '0,1/2,1' -> doubled ints (0, 1, 2)."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        frac = Fraction(tok)
        doubled = frac * 2
        if doubled.denominator != 1 or doubled < 0:
            raise argparse.ArgumentTypeError(
                f"t must be a nonnegative half-integer, got {tok!r}")
        out.append(int(doubled))
    return tuple(out)


def _parse_gen_spec(spec: str) -> Graph:
    family, _, rest = spec.partition(":")
    args = [tok for tok in rest.split(",") if tok] if rest else []
    if family in ("complete", "cycle", "path", "empty"):
        if len(args) != 1:
            raise ValueError(f"{family} takes one size, e.g. {family}:5")
        return generate(family, n=int(args[0]))
    if family == "petersen":
        return generate("petersen")
    if family in ("er", "er_random"):
        if len(args) != 3:
            raise ValueError("er takes n,p,seed, e.g. er:8,0.5,42")
        return generate("er_random", n=int(args[0]), p=float(args[1]),
                        seed=int(args[2]))
    raise ValueError(f"unknown generator family {family!r}")


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _reports_to_csv(reports: list[dict]) -> str:
    names = sorted({c["name"] for rep in reports for c in rep["claims"]})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["g6"] + names)
    for rep in reports:
        verdicts = {c["name"]: c["verdict"] for c in rep["claims"]}
        writer.writerow([rep["g6"]] + [verdicts.get(name, "") for name in names])
    return buf.getvalue()


def _write_output(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args, guards: Guards) -> VerificationParams:
    return VerificationParams(
        r_list=args.r,
        t2_list=args.t,
        guards=guards,
        seed=getattr(args, "seed", 0) or 0,
        max_path_len=getattr(args, "max_path_len", 3),
    )


def cmd_analyze(args, guards: Guards) -> int:
    if args.g6:
        try:
            g = parse_graph6(args.g6)
        except GraphFormatError as exc:
            print(f"error: bad graph6 input: {exc}", file=sys.stderr)
            return EXIT_ERROR
    else:
        try:
            g = _parse_gen_spec(args.gen)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
    report = full_report(g, _params(args, guards))
    if args.format == "csv":
        _write_output(_reports_to_csv([report]), args.out)
    else:
        _write_output(_dump_json(report) + "\n", args.out)
    return EXIT_VIOLATION if report_violations(report) else EXIT_OK


def cmd_sweep(args, guards: Guards) -> int:
    params = _params(args, guards)
    structural = False
    if args.exhaustive:
        max_n = args.max_n
        if max_n is None:
            print("error: --exhaustive needs --max-n", file=sys.stderr)
            return EXIT_ERROR
        if max_n > EXHAUSTIVE_MAX_N:
            print(f"error: exhaustive sweep supports n <= {EXHAUSTIVE_MAX_N}",
                  file=sys.stderr)
            return EXIT_ERROR
        # Without --min-n the sweep covers exactly the graphs on max_n vertices.
        min_n = args.min_n if args.min_n is not None else max_n
        graphs = list(suites_mod.exhaustive_graphs(min_n, max_n))
    else:
        entries, errors = suites_mod.load_graph6_lines(args.input)
        for lineno, message in errors:
            print(f"{args.input}:{lineno}: {message}", file=sys.stderr)
            structural = True
        graphs = [g for _, g in entries]
    reports = suites_mod.sweep_reports(graphs, params)
    if args.format == "csv":
        _write_output(_reports_to_csv(reports), args.out)
    else:
        _write_output("".join(_dump_json(rep) + "\n" for rep in reports), args.out)
    violated = any(report_violations(rep) for rep in reports)
    print(f"swept {len(reports)} graphs, "
          f"{sum(len(report_violations(rep)) for rep in reports)} violations",
          file=sys.stderr)
    if structural:
        return EXIT_ERROR
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_search(args, guards: Guards) -> int:
    params = _params(args, guards)
    try:
        result = suites_mod.search_claim(
            args.claim, params,
            min_n=args.min_n if args.min_n is not None else 1,
            max_n=args.max_n,
            samples=args.samples,
            sample_ns=tuple(args.sample_ns) if args.sample_ns else (),
            seed=args.seed or 0,
        )
    except suites_mod.UnknownClaimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    lines = "".join(_dump_json(a) + "\n" for a in result["counterexamples"])
    _write_output(lines, args.out)
    print(f"searched {result['graphs']} graphs ({result['records']} claim records), "
          f"{len(result['counterexamples'])} counterexamples", file=sys.stderr)
    return EXIT_VIOLATION if result["counterexamples"] else EXIT_OK


def cmd_verify(args, guards: Guards) -> int:
    suite = args.suite
    if suite not in suites_mod.SUITES:
        print(f"error: unknown suite {suite!r}; valid suites: "
              f"{', '.join(sorted(suites_mod.SUITES))}", file=sys.stderr)
        return EXIT_ERROR
    try:
        if suite == "lonely-path":
            result = suites_mod.suite_lonely_path(
                args.max_n, max_len=args.max_path_len, samples=args.samples,
                sample_ns=tuple(args.sample_ns) if args.sample_ns else (7, 8),
                seed=args.seed or 0, guards=guards)
        elif suite == "generalized-lonely-path":
            result = suites_mod.suite_gen_lonely_path(
                args.max_n, rs=tuple(r for r in args.r if r >= 2),
                max_len=args.max_path_len, guards=guards)
        elif suite == "replete":
            result = suites_mod.suite_replete(
                args.max_n, t2s=args.t, rs=tuple(r for r in args.r if r >= 1),
                guards=guards)
        elif suite == "swap":
            result = suites_mod.suite_swap(args.max_n, guards=guards)
        elif suite == "properties":
            result = suites_mod.suite_properties(
                seed=args.seed or 0, predicates=args.predicates,
                max_n_br=min(args.max_n, 5), guards=guards)
        else:
            result = suites_mod.suite_identities(args.max_n, guards=guards)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _write_output(_dump_json(result.to_dict()) + "\n", args.out)
    print(f"suite {suite}: {result.checked} checked, {result.vacuous} vacuous, "
          f"{len(result.violations)} violations", file=sys.stderr)
    return EXIT_OK if result.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stingycolor",
        description="Exact chromatic analysis: frames, lonely edges, stingy "
                    "and r-bounded colorings, Reed-type bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r", type=_parse_int_list, default=(1, 2, 3),
                       help="comma-separated class-size caps (default 1,2,3)")
        p.add_argument("--t", type=_parse_t_list, default=(0, 1),
                       help="comma-separated half-integer slacks (default 0,1/2)")
        p.add_argument("--max-path-len", type=int, default=3,
                       help="vertex cap per lonely path (default 3)")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("analyze", help="full report for one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph6 string")
    src.add_argument("--gen", help="generator spec, e.g. cycle:5 or er:8,0.5,42")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="report every graph in a corpus or range")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="file of graph6 lines")
    src.add_argument("--exhaustive", action="store_true",
                     help="all isomorphism classes on max-n vertices "
                          "(widen with --min-n)")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", help="hunt for counterexamples to one claim")
    p.add_argument("--claim", required=True,
                   help="claim name, e.g. gen-reed-conjecture[r=3]")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int)
    p.add_argument("--samples", type=int, default=0,
                   help="seeded random samples beyond the exhaustive range")
    p.add_argument("--sample-ns", type=_parse_int_list, default=(),
                   help="vertex counts for random samples, e.g. 7,8,9")
    p.add_argument("--seed", type=int,
                   help="PRNG seed; required when --samples > 0")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True,
                   help="one of: " + ", ".join(sorted(suites_mod.SUITES)))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--sample-ns", type=_parse_int_list, default=())
    p.add_argument("--seed", type=int)
    p.add_argument("--predicates", type=int, default=100,
                   help="random predicates per graph in the properties suite")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 0) and args.seed is None:
        parser.error("--samples requires an explicit --seed")
    guards = _guards_from_env()
    try:
        return args.func(args, guards)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
