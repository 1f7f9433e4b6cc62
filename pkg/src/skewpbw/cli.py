"""Command-line front end: ``classify``, ``analyze``, ``table``, ``deform``.

Exit codes: 0 success, 1 parse error, 2 invalid shape or table mismatch,
3 resource cap hit (completion budget or bar-complex size cap).
"""

import argparse
import json
import sys
from typing import Dict, List, Optional

from .corpus import corpus, fixture
from .presentation import PresentationError, load, parse_param_binding
from .report import (
    analyze_report,
    classify_report,
    compare_expectation,
    deform_report,
    parse_expectation,
    render_table,
    render_text,
    table_report,
    table_rows,
)
from .rewrite import DEFAULT_BUDGET, BudgetExceeded, UnitIdeal

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


def _load(source: str, params: Dict):
    if source.startswith("fixture:"):
        return fixture(source[len("fixture:"):], params)
    return load(source, params)


def _bounds(text: str):
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected I,J, got {text!r}") from None
    return i, j


def _emit(rep: Dict, as_json: bool):
    if as_json:
        sys.stdout.write(json.dumps(rep, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render_text(rep))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewpbw", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--param", action="append", default=[], metavar="NAME=RATIONAL",
                        help="bind a parameter (repeatable)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="RULES",
                        help="rule cap for bounded completion")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="shape check and subclass flags")
    p.add_argument("input", help="path to a .alg file or fixture:NAME")

    p = sub.add_parser("analyze", parents=[common], help="full PBW / Koszul analysis")
    p.add_argument("input")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--ext-bounds", type=_bounds, default=(4, 4), metavar="I,J")

    p = sub.add_parser("table", parents=[common], help="subclass table over a fixture corpus")
    p.add_argument("corpus", help="sridharan, core, all, or a comma-separated list of fixtures")
    p.add_argument("--expect", metavar="FILE", help="compare against an expectation file")

    p = sub.add_parser("deform", parents=[common], help="PBW-deformation analysis")
    p.add_argument("input")
    p.add_argument("--max-degree", type=int, default=5)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = dict(parse_param_binding(s) for s in args.param)
        if args.command == "table":
            return _table(args, params)
        p = _load(args.input, params)
    except (PresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "classify":
            rep = classify_report(p)
        elif args.command == "analyze":
            rep = analyze_report(p, args.max_degree, args.ext_bounds, args.budget)
        else:
            rep = deform_report(p, args.max_degree, args.budget)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UnitIdeal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(rep, args.json)
    if args.command in ("classify", "analyze") and not rep["shape"]["valid"]:
        return EXIT_INVALID
    if rep["ext"] is not None and not rep["ext"]["trusted"]:
        return EXIT_CAP
    return EXIT_OK


def _table(args, params) -> int:
    names = corpus(args.corpus)
    rows = table_rows([fixture(n, params) for n in names])
    if args.json:
        sys.stdout.write(json.dumps(table_report(args.corpus, rows), indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render_table(rows))
    if args.expect:
        with open(args.expect, encoding="utf-8") as fh:
            expected = parse_expectation(fh.read())
        diffs = compare_expectation(rows, expected)
        if diffs:
            print("mismatch against " + args.expect + ":", file=sys.stderr)
            for d in diffs:
                print("  " + d, file=sys.stderr)
            return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
