#!/usr/bin/env python3
"""
Persistence reasoner command-line tool.

Reads a timed knowledge base and a persistence schema file, then:
- status <t> <formula>             belief status of a formula in the history
- query <t> <formula> [--given f]  nonmonotonic inference at t
- problems <fluent>                maximal non-informative intervals of a fluent
- timeline <fluent> <from> <to> <step>   certainty degrees as CSV
- validate                         persistence axiom checks of the schemata

Exit codes: 0 success, 2 parse error, 3 semantic or validation error,
4 closedness violation.
"""

import argparse
import csv
import logging
import sys
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional

from app.core.config import settings
from app.core.errors import ParseError, ReasonerError, ValidationFailure
from app.models.formula import Atom
from app.models.time import Interval
from app.parsing.grammar import parse_formula, parse_time, render_formula
from app.persistence.piecewise import classify_persistence
from persistence_service import PersistenceReasoner, configure_logging

logger = logging.getLogger("persistence_cli")

# Reports whose failure makes `validate` exit with an error; the symmetry
# checks describe a fluent rather than constrain it.
AXIOM_CHECKS = ("D1", "D2", "D3", "D4", "H1", "H2", "H3")


def format_degree(value: Fraction, digits: Optional[int] = None) -> str:
    """Exact p/q rendering, or a rounded decimal when digits is given."""
    if digits is None:
        return str(value)
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    return f"{exact:.{digits}f}"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fluent(text: str) -> Atom:
    try:
        return Atom(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="persistence_cli",
        description="Possibilistic decreasing persistence over a timed knowledge base",
    )
    parser.add_argument("--kb", default=None, help=f"Timed KB file (default: {settings.KB_PATH})")
    parser.add_argument("--schema", default=None, help=f"Persistence schema file (default: {settings.SCHEMA_PATH})")
    parser.add_argument("--decimal", type=int, default=settings.DECIMAL_DIGITS, metavar="DIGITS",
                        help="Render degrees as rounded decimals instead of exact rationals")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable DEBUG-level logging to stderr")

    commands = parser.add_subparsers(dest="command", required=True)

    status = commands.add_parser("status", help="Belief status of a formula at a time point")
    status.add_argument("t")
    status.add_argument("formula")

    query = commands.add_parser("query", help="Nonmonotonic inference at a time point")
    query.add_argument("t")
    query.add_argument("formula")
    query.add_argument("--given", default=None, help="Condition formula for a conditional query")

    problems = commands.add_parser("problems", help="Extrapolation problems of a fluent")
    problems.add_argument("fluent")

    timeline = commands.add_parser("timeline", help="Certainty timeline of a fluent as CSV")
    timeline.add_argument("fluent")
    timeline.add_argument("start", type=_rational)
    timeline.add_argument("end", type=_rational)
    timeline.add_argument("step", type=_rational)

    validate = commands.add_parser("validate", help="Check the schemata against the persistence axioms")
    validate.add_argument("--displayed-h-direction", action="store_true",
                          help="Check H1/H3 with the symbolic inequalities instead of the prose direction")
    validate.add_argument("--lengths", default=None,
                          help="Comma-separated interval lengths to instantiate (default from settings)")
    return parser


def run_status(reasoner: PersistenceReasoner, args) -> None:
    status = reasoner.status(parse_time(args.t), parse_formula(args.formula))
    print(status.value)


def run_query(reasoner: PersistenceReasoner, args, digits: Optional[int]) -> None:
    psi = parse_formula(args.formula)
    given = parse_formula(args.given) if args.given is not None else None
    verdict = reasoner.query(parse_time(args.t), psi, given)
    outcome = "accepted" if verdict.accepted else "not accepted"
    necessity = format_degree(verdict.necessity, digits)
    bound = format_degree(verdict.inconsistency, digits)
    if given is None:
        print(f"|~_{verdict.time} {render_formula(psi)}: {outcome} (N={necessity}, Incons={bound})")
    else:
        print(
            f"{render_formula(given)} |~_{verdict.time} {render_formula(psi)}: {outcome} "
            f"(N(given -> formula)={necessity}, N(!given)={bound})"
        )


def run_problems(reasoner: PersistenceReasoner, args) -> None:
    for problem in reasoner.problems(_fluent(args.fluent)):
        line = str(problem)
        kind = reasoner.persistence_kind(problem)
        if kind:
            line += f" [{kind}]"
        print(line)


def run_timeline(reasoner: PersistenceReasoner, args, digits: Optional[int]) -> None:
    rows = reasoner.timeline(_fluent(args.fluent), Interval.closed(args.start, args.end), args.step)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["t", "N_true", "N_false", "status"])
    for row in rows:
        writer.writerow([row.t, format_degree(row.n_true, digits), format_degree(row.n_false, digits), row.status.value])


def run_validate(reasoner: PersistenceReasoner, args) -> None:
    lengths = None
    if args.lengths:
        lengths = [_rational(item.strip()) for item in args.lengths.split(",") if item.strip()]
    for schema in reasoner.pers:
        for name, fn in schema.functions().items():
            print(f"{schema.fluent.name} {name.replace('_', ' ')}: {classify_persistence(fn).value}")
    reports = reasoner.validate(lengths, displayed=args.displayed_h_direction)
    failed = 0
    for report in reports:
        print(report.summary())
        if not report.passed and report.check in AXIOM_CHECKS:
            failed += 1
    if failed:
        raise ValidationFailure(f"{failed} axiom check(s) failed")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)

    try:
        reasoner = PersistenceReasoner.from_files(args.kb, args.schema)
        if args.command == "status":
            run_status(reasoner, args)
        elif args.command == "query":
            run_query(reasoner, args, args.decimal)
        elif args.command == "problems":
            run_problems(reasoner, args)
        elif args.command == "timeline":
            run_timeline(reasoner, args, args.decimal)
        elif args.command == "validate":
            run_validate(reasoner, args)
    except ReasonerError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except (OSError, ValueError, argparse.ArgumentTypeError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return ReasonerError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
