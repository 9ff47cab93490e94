"""Command line interface.

Exit codes: 0 success (and positive verdicts), 1 a positivity check answered
no, 2 usage or input errors, 3 corpus verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus
from .errors import ContractViolation, EdgeCapacityError, FamilyError, GraphParseError
from .expansions import (
    DEFAULT_EDGE_CAP,
    csf_elementary,
    csf_monomial,
    csf_power,
    csf_schur,
    format_expansion,
    schur_coefficient,
)
from .graphs import Graph, independence_number, parse_graph
from .partitions import (
    Partition,
    format_partition,
    multiplicity_factorial,
    parse_partition,
    partitions_of,
    sort_to_partition,
)
from .census import count_of_type, stable_partition_census
from .positivity import e_positivity_verdict, schur_positivity_verdict
from .rimhooks import special_tabloids


def dump_json(obj) -> str:
    # Single canonical serialization so emitted JSON round-trips byte for byte.
    return json.dumps(obj, indent=2, sort_keys=False)


def _read_graph(args) -> Graph:
    spec = args.graph
    if spec == "-":
        spec = sys.stdin.read()
    return parse_graph(spec, args.input_format)


def _graph_label(args) -> str:
    return args.graph if args.graph != "-" else f"<stdin:{args.input_format}>"


def _cmd_expand(args) -> int:
    g = _read_graph(args)
    if args.basis == "m":
        exp = csf_monomial(g)
    elif args.basis == "p":
        cap = int(os.environ.get("CSF_EDGE_CAP", DEFAULT_EDGE_CAP))
        exp = csf_power(g, edge_cap=cap)
    elif args.basis == "e":
        exp = csf_elementary(g)
    else:
        exp = csf_schur(g)
    if args.format == "json":
        print(dump_json(exp.to_json(_graph_label(args))))
    else:
        print(format_expansion(exp, style=args.format))
    return 0


def _cmd_coeff(args) -> int:
    g = _read_graph(args)
    lam = parse_partition(args.shape)
    if lam.weight != g.n:
        raise ContractViolation(
            f"shape {format_partition(lam)} has weight {lam.weight}, "
            f"graph has {g.n} vertices"
        )
    value = schur_coefficient(g, lam)
    if args.explain:
        alpha = independence_number(g)
        total = 0
        for tab in special_tabloids(lam):
            if any(part > alpha for part in tab.content):
                continue
            mu = sort_to_partition(tab.content)
            if len(mu) > len(lam):
                continue
            count = count_of_type(g, mu)
            if count == 0:
                continue
            mult = multiplicity_factorial(mu)
            term = tab.sign * mult * count
            total += term
            print(
                f"content={format_partition(tab.content)}"
                f"  even_spans={tab.even_span_count}"
                f"  mult={mult}  count={count}  term={term:+d}"
            )
        assert total == value
        print(f"coefficient = {value}")
    else:
        print(value)
    return 0


def _cmd_check(args) -> int:
    g = _read_graph(args)
    if args.property == "schur":
        verdict = schur_positivity_verdict(g, strategy=args.strategy)
    else:
        verdict = e_positivity_verdict(g)
    print(dump_json(verdict.to_json()))
    return 0 if verdict.positive else 1


def _cmd_census(args) -> int:
    g = _read_graph(args)
    print(dump_json(stable_partition_census(g).to_json()))
    return 0


def _cmd_corpus(args) -> int:
    fixtures = corpus.FIXTURES
    if args.id is not None:
        fixtures = tuple(f for f in fixtures if f.id == args.id)
        if not fixtures:
            known = ", ".join(f.id for f in corpus.FIXTURES)
            raise ContractViolation(f"no fixture {args.id!r}; known: {known}")
    if args.action == "export":
        print(dump_json([f.to_json() for f in fixtures]))
        return 0
    failed = 0
    for fix in fixtures:
        ok, detail = corpus.verify_fixture(fix)
        status = "ok" if ok else "MISMATCH"
        print(f"{status} {fix.id} [{fix.provenance}]: {detail}")
        if fix.note:
            print(f"   note: {fix.note}")
        if not ok:
            failed += 1
    print(f"verified {len(fixtures) - failed}/{len(fixtures)} fixtures")
    return 3 if failed else 0


def _add_graph_args(sub) -> None:
    sub.add_argument("--graph", required=True, help="graph spec, or - for stdin")
    sub.add_argument(
        "--input-format",
        default="family_dsl",
        choices=["family_dsl", "graph6", "edge_list"],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromsym",
        description="Chromatic symmetric functions in exact arithmetic.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("expand", help="expand X_G in a symmetric function basis")
    _add_graph_args(p)
    p.add_argument("--basis", required=True, choices=["m", "p", "e", "s"])
    p.add_argument("--format", default="text", choices=["text", "json", "latex"])
    p.set_defaults(func=_cmd_expand)

    p = subs.add_parser("coeff", help="one Schur coefficient of X_G")
    _add_graph_args(p)
    p.add_argument("--shape", required=True, help="partition, e.g. 3,3,2")
    p.add_argument(
        "--explain",
        action="store_true",
        help="print the contributing tabloid terms",
    )
    p.set_defaults(func=_cmd_coeff)

    p = subs.add_parser("check", help="decide Schur or elementary positivity")
    p.add_argument("property", choices=["schur", "e"])
    _add_graph_args(p)
    p.add_argument(
        "--strategy",
        default="exhaustive",
        choices=["fast", "exhaustive"],
        help="only the schur check distinguishes these",
    )
    p.set_defaults(func=_cmd_check)

    p = subs.add_parser("census", help="stable partition counts by type")
    _add_graph_args(p)
    p.set_defaults(func=_cmd_census)

    p = subs.add_parser("corpus", help="built-in regression fixtures")
    p.add_argument("action", choices=["verify", "export"])
    p.add_argument("--id", default=None, help="restrict to one fixture")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep both.
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ContractViolation, GraphParseError, FamilyError, EdgeCapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
