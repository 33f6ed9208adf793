"""Command-line entry point.

Exit status: 0 SAT (or success for ``bounds``/``mis-count``), 1 UNSAT,
2 usage or parse error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from typing import TextIO

from listcolor.bounds import fit_constant
from listcolor.dp import SolverInconsistency, solve
from listcolor.graph import DEFAULT_MAX_N, Instance, InstanceParseError, parse_instance
from listcolor.mis import count_mis
from listcolor.oracle import DEFAULT_BUDGET, brute_force_colorable

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="listcolor", description="Exact list-coloring over vertex subsets.")
    sub = parser.add_subparsers(dest="mode", required=True)

    p_solve = sub.add_parser("solve", help="decide list-colorability and print a coloring")
    p_solve.add_argument("file")
    p_solve.add_argument("--stats", action="store_true", help="print work counters to stderr")
    p_solve.add_argument("--check-oracle", action="store_true", help="cross-check the decision by brute force")
    p_solve.add_argument("--long-list-rule", choices=("paper", "degree"), default="paper")
    p_solve.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)

    for name, text in (("bounds", "print the fit constant and predicted work"), ("mis-count", "count maximal independent sets")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    return parser


def _load(path: str, max_n: int) -> Instance:
    with open(path, encoding="ascii") as fh:
        return parse_instance(fh.read(), max_n=max_n)


def _solve(args: argparse.Namespace, inst: Instance, out: TextIO, err: TextIO) -> int:
    result = solve(inst, rule=args.long_list_rule)
    if args.check_oracle:
        if inst.n <= DEFAULT_BUDGET.max_colorable_n:
            expected = brute_force_colorable(inst)
            if expected != result.sat:
                print(f"c oracle mismatch: solver {result.status}, oracle {'SAT' if expected else 'UNSAT'}", file=err)
                return EXIT_INTERNAL
        else:
            print(f"c oracle check skipped: n={inst.n} exceeds budget {DEFAULT_BUDGET.max_colorable_n}", file=err)

    print(f"s {result.status}", file=out)
    if result.sat:
        for v, c in result.coloring.items():
            print(f"v {v + 1} {c}", file=out)

    if args.stats:
        st = result.stats
        print(f"c n {st.n}", file=err)
        print(f"c reduced_n {st.reduced_n}", file=err)
        print(f"c kappa_reduced {st.kappa_reduced}", file=err)
        for j, count in enumerate(st.per_round, start=1):
            print(f"c round {j} scans {count}", file=err)
        print(f"c total_scans {st.total}", file=err)
        print(f"c rule {st.fit.rule}", file=err)
        print(f"c t {st.t}", file=err)
        print(f"c predicted_work {st.predicted_work:.6g}", file=err)
    return EXIT_SAT if result.sat else EXIT_UNSAT


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_SAT

    try:
        inst = _load(args.file, args.max_n)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {args.file}: {exc}", file=err)
        return EXIT_USAGE
    except InstanceParseError as exc:
        print(f"error: {args.file}: {exc}", file=err)
        return EXIT_USAGE

    try:
        if args.mode == "solve":
            return _solve(args, inst, out, err)
        if args.mode == "bounds":
            report = fit_constant(inst.graph)
            print(f"n {report.n}", file=out)
            print(f"rule {report.rule}", file=out)
            print(f"t {report.t}", file=out)
            print(f"predicted_work {report.predicted_work:.6g}", file=out)
            return EXIT_SAT
        print(count_mis(inst.graph, inst.graph.all_vertices), file=out)
        return EXIT_SAT
    except SolverInconsistency as exc:
        print(f"error: internal inconsistency: {exc}", file=err)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
