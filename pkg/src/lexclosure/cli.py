"""Command-line front end.

Exit status: 0 verdict true or success, 1 verdict false, 2 usage or parse
error, 3 cap exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formula import FormulaSyntaxError
from .harness import check_properties
from .kb import DuplicateDefaultError, KBSyntaxError, KnowledgeBase, load_kb
from .lex import METHODS, InvariantError, QueryResult
from .query import CLOSURES, QuerySyntaxError, answer, parse_query
from .ranking import compute_rank_partition
from .rational import PreconditionError
from .sat import CapExceededError

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _fmt_block(ds, kb: KnowledgeBase) -> str:
    return "{" + ", ".join(str(d) for d in sorted(ds, key=kb.index)) + "}"


def cmd_rank(args) -> int:
    kb = load_kb(args.kb)
    part = compute_rank_partition(kb)
    if args.json:
        print(json.dumps(part.to_json(), indent=2))
        return EXIT_TRUE
    for i, block in enumerate(part.blocks):
        print(f"D_{i} = {_fmt_block(block, kb)}")
    print(f"D_inf = {_fmt_block(part.infinite, kb)}")
    print(f"order = {part.order}")
    return EXIT_TRUE


def _print_result(res: QueryResult, kb: KnowledgeBase, explain: bool) -> None:
    print(f"query:   {res.query}")
    print(f"closure: {res.closure} (method {res.method})")
    print(f"rank of antecedent: {res.to_json()['rank_of_antecedent']}")
    print(f"verdict: {'true' if res.verdict else 'false'}")
    if not explain:
        return
    ex = res.explanation
    if ex.get("tuple") is not None:
        print(f"violation tuple of minimal worlds: {tuple(ex['tuple'])}")
    if ex.get("minimal_worlds") is not None:
        print("minimal worlds:")
        for w in ex["minimal_worlds"]:
            print("  " + " ".join(f"{v}={'T' if val else 'F'}" for v, val in w.items()))
    if ex.get("bases") is not None:
        print("bases:")
        for base in ex["bases"]:
            print("  {" + ", ".join(f"#{i} ({kb.defaults[i]})" for i in base) + "}")
    for key in ("rank_of_counterexample", "note"):
        if key in ex:
            print(f"{key.replace('_', ' ')}: {ex[key]}")


def cmd_query(args) -> int:
    kb = load_kb(args.kb)
    a, b = parse_query(args.query)
    res = answer(kb, a, b, args.closure, args.method)
    if args.json:
        print(json.dumps(res.to_json(), indent=2))
    else:
        _print_result(res, kb, args.explain)
    return EXIT_TRUE if res.verdict else EXIT_FALSE


def cmd_compare(args) -> int:
    kb = load_kb(args.kb)
    a, b = parse_query(args.query)
    verdicts = {}
    for closure in CLOSURES:
        method = "bases" if closure == "rational" else args.method
        verdicts[closure] = answer(kb, a, b, closure, method).verdict
    if args.json:
        print(json.dumps({"query": args.query, "verdicts": verdicts}, indent=2))
    else:
        print(f"query: {args.query}")
        for closure, v in verdicts.items():
            print(f"  {closure:<9} {'true' if v else 'false'}")
    return EXIT_TRUE


def cmd_selfcheck(args) -> int:
    kb = load_kb(args.kb)
    report = check_properties(kb, args.samples, args.seed)
    print(json.dumps(report.to_json(), indent=2) if args.json else report.to_text())
    return EXIT_TRUE if report.ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexclosure",
        description="Lexicographic and rational closure of propositional normal defaults",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="print the rank partition and order of a KB")
    p.add_argument("kb")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("query", help='answer "a |~ b" under one closure')
    p.add_argument("kb")
    p.add_argument("query")
    p.add_argument("--closure", choices=CLOSURES, default="lex")
    p.add_argument(
        "--method", choices=METHODS, default="both",
        help="model (ranked worlds), bases, or both; for rational closure 'bases' is the rank comparison",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("compare", help="verdicts under all four closures")
    p.add_argument("kb")
    p.add_argument("query")
    p.add_argument("--method", choices=METHODS, default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("selfcheck", help="sampled KLM and rational-monotonicity check")
    p.add_argument("kb")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except (FormulaSyntaxError, KBSyntaxError, DuplicateDefaultError, QuerySyntaxError,
            PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
