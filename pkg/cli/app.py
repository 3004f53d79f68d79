"""
nondet-agg Command Line
Argument parsing, dispatch, exit-code mapping and report output
"""

import argparse
import json
import os
import shlex
import sys
from typing import List, Optional

from algebra.errors import AggregationError, EvaluationError
from checkers.report import Report
from cli.commands import COMMANDS
from cli.render import render_report
from config.settings import ENV_THREADS, RUNTIME, TOOL_NAME, VERSION
from utils.export import ReportExporter
from utils.logger import get_logger
from utils.validator import InputValidator, ValidationError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _common_parser() -> argparse.ArgumentParser:
    """Flag output yang dipakai semua subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_argument_group('output')
    output.add_argument('--json', action='store_true',
                        help='print the canonical JSON report instead of text')
    output.add_argument('--export', metavar='PATH',
                        help='also write the report to PATH (.json, .csv or .pdf)')
    output.add_argument('--timing', action='store_true',
                        help='include per-check durations')
    output.add_argument('--progress', action='store_true',
                        help='show a progress bar on stderr')
    output.add_argument('--verbose', action='store_true',
                        help='log at INFO level and print a session summary on stderr')
    return common


def _bounds_arguments(parser: argparse.ArgumentParser, parts_help: str):
    parser.add_argument('--ops', metavar='FILE',
                        help='operator spec file, or catalogue:NAME')
    parser.add_argument('--max-parts', type=int, metavar='N', help=parts_help)
    parser.add_argument('--max-len', type=int, metavar='N',
                        help='largest list/partition length enumerated')
    parser.add_argument('--image-bound', type=int, metavar='N',
                        help='list length bound for the image of foldr(otimes, z)')


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description='Bounded determinism checker for Spark-style aggregate (oplus, otimes, z).',
    )
    parser.add_argument('--version', action='version', version=f"{TOOL_NAME} {VERSION}")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    laws = sub.add_parser('laws', parents=[common], help='check the NonDet monad laws')
    laws.add_argument('--carrier', metavar='SPEC', help='carrier, e.g. "mod 5" or "int 0..3"')
    laws.add_argument('--set-bound', type=int, metavar='N',
                      help='largest NonDet value size quantified over')

    lemmas = sub.add_parser('lemmas', parents=[common],
                            help='check the permutation and homomorphism lemmas')
    _bounds_arguments(lemmas, 'partition count for the homomorphism-concat lemma')
    lemmas.add_argument('--function', metavar='NAME', help='pure function for the map lemmas')
    lemmas.add_argument('--predicate', metavar='NAME', help='predicate for the filter lemma')

    for name, help_text in (('check', 'decide determinism of aggregate at bounds'),
                            ('converse', 'check the converse theorems at bounds')):
        command = sub.add_parser(name, parents=[common], help=help_text)
        _bounds_arguments(command, 'largest number of partitions')
        command.add_argument('--override-guards', action='store_true',
                             help='allow --max-parts above the guard')

    demo = sub.add_parser('demo-float', parents=[common],
                          help='show float addition diverging across merge orders')
    demo.add_argument('--preset', metavar='NAME', help='bundled preset name')
    demo.add_argument('--values', metavar='LIST', help='comma-separated floats')
    demo.add_argument('--parts', metavar='LIST', help='comma-separated partition sizes')
    return parser


def validate_args(args: argparse.Namespace):
    """
    Validasi environment dan bounds sebelum dispatch

    Raises:
        ValidationError: bounds melewati guard atau NONDET_AGG_THREADS invalid
    """
    validator = InputValidator()
    validator.validate_threads(os.getenv(ENV_THREADS))
    validator.validate_bounds(
        max_parts=getattr(args, 'max_parts', None),
        max_len=getattr(args, 'max_len', None),
        image_bound=getattr(args, 'image_bound', None),
        set_bound=getattr(args, 'set_bound', None),
        override_guards=getattr(args, 'override_guards', False),
    )
    validator.raise_if_errors()


def run(args: argparse.Namespace, argv: List[str]) -> Report:
    logger = get_logger()
    logger.log_command(args.command, argv)
    validate_args(args)
    report = COMMANDS[args.command](args)
    report.command = ' '.join([TOOL_NAME, shlex.join(argv)]).strip()
    return report


def emit(report: Report, args: argparse.Namespace):
    """Tulis report ke stdout, lalu export bila diminta"""
    if args.json:
        sys.stdout.write(report.to_json(args.timing))
    else:
        sys.stdout.write(render_report(report, color=sys.stdout.isatty(),
                                       include_timing=args.timing))
    sys.stdout.flush()
    if args.export:
        path = ReportExporter().export(report, args.export, args.timing)
        get_logger().info(f"Report exported to {path}")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point

    Returns:
        0 semua pass / hypothesis-not-met, 1 ada fail, 2 usage/parse/guard error
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logger = get_logger()
    RUNTIME['progress'] = args.progress
    if args.verbose:
        logger.set_level('INFO')

    try:
        report = run(args, argv)
        emit(report, args)
    except ValidationError as exc:
        for err in exc.errors:
            flag = err['field'] if err['field'] == ENV_THREADS else '--' + err['field']
            print(f"{TOOL_NAME}: {flag}: {err['message']}", file=sys.stderr)
        return EXIT_USAGE
    except EvaluationError as exc:
        logger.log_error_with_traceback(exc, args.command)
        print(f"{TOOL_NAME}: check aborted: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AggregationError, OSError, ValueError) as exc:
        logger.log_error_with_traceback(exc, args.command)
        print(f"{TOOL_NAME}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.verbose:
        print(json.dumps(logger.get_session_summary(), sort_keys=True), file=sys.stderr)
    return report.status()


if __name__ == "__main__":
    sys.exit(main())
