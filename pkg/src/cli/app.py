#!/usr/bin/env python3
"""
Command-line front-end.

    python -m src.cli.app <command> [inputs...] [options]

Exit codes: 0 success, 1 obstruction found under --strict, 2 input error.

Author: Robert Torres
"""

import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

if __name__ == '__main__':
    sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.config import load_config, setup_logging
from src.exceptions import DegenerateAlexanderError, DomainError, HomocylError
from src.cli.parser import ParsedInput, parse_input
from src.cli.report import Report, describe_error, format_matrix, write_json
from src.invariants import cylinder, exterior, pretzel, seifert

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_OBSTRUCTED = 1
EXIT_INPUT_ERROR = 2

Handler = Callable[[argparse.Namespace, ParsedInput, Report], Tuple[str, Dict[str, Any]]]


def _alexander(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    try:
        if subject.kind == "seifert":
            poly = seifert.alexander(subject.seifert)
        elif subject.kind == "exterior":
            poly = exterior.milnor_alexander(subject.exterior, args.drop)
        else:
            poly = exterior.milnor_from_cylinder(subject.presentation, var=args.var)
    except DegenerateAlexanderError as e:
        logger.info(f"Degenerate Alexander polynomial: {e}")
        report.mark("obstructed")
        return "0 (degenerate)", {"alexander": None, "degenerate": True}
    return str(poly), {"alexander": poly.to_dict(), "degenerate": False}


def _classify(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    result = seifert.classify(subject.seifert)
    if result.verdict != seifert.Verdict.HOMOLOGICALLY_FIBERED:
        report.mark("obstructed")
    poly = str(result.alexander) if result.alexander else "0 (degenerate)"
    text = f"{result.verdict.value} (Alexander {poly}; det S = {result.det_s})"
    return text, result.to_dict()


def _sigma(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    if subject.kind == "seifert":
        m = seifert.sigma(subject.seifert)
    else:
        m = cylinder.sigma_specialized(subject.presentation, subject.rho)
    rows = seifert.matrix_to_lists(m)
    return f"sigma =\n{format_matrix(rows)}", {"sigma": rows}


def _cylinder(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    p, rho = subject.presentation, subject.rho
    result = cylinder.cylinder_invariants(p, rho)
    magnus_rows = result.magnus.to_strings()
    sigma_rows = seifert.matrix_to_lists(result.sigma_specialized)
    text = "\n".join([
        f"torsion = {result.torsion}",
        "magnus =",
        format_matrix(magnus_rows),
        "sigma =",
        format_matrix(sigma_rows),
    ])
    return text, {"variables": list(rho.variables), "torsion": result.torsion.to_dict(),
                  "magnus": magnus_rows, "sigma": sigma_rows}


def _fiber_check(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    result = cylinder.fibering_report(subject.presentation, subject.rho)
    if result.obstructed:
        report.mark("obstructed")
        text = "OBSTRUCTED: " + "; ".join(result.reasons() + ["not fibered"])
    else:
        text = "UNOBSTRUCTED: torsion trivial; Magnus matrix integral"
    return text, result.to_dict()


def _torsion(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    if subject.kind == "cylinder":
        value = cylinder.torsion_plus(subject.presentation, subject.rho)
    else:
        value = exterior.torsion_exterior(subject.exterior, args.drop)
    return str(value), {"torsion": value.to_dict()}


def _factor_check(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    if subject.kind == "seifert":
        holds = seifert.factor_check(subject.seifert)
        if not holds:
            report.mark("obstructed")
        return ("HOLDS" if holds else "FAILS") + ": det(tS - S^T) = det(S^T) det(t sigma - I)", {"holds": holds}
    result = exterior.factorization_with_closure(subject.presentation, subject.rho, args.mu_var)
    if not result.holds:
        report.mark("obstructed")
    text = "\n".join([
        f"exterior torsion = {result.exterior}",
        f"cylinder product = {result.product}",
        f"{'HOLDS' if result.holds else 'FAILS'} (rho: {result.rho})",
    ])
    return text, result.to_dict()


def _bound(args, subject: ParsedInput, report: Report) -> Tuple[str, Dict[str, Any]]:
    points = args.points or load_config(args.config)["bound"]["evaluation_points"]
    if subject.kind == "seifert":
        matrix = seifert.alexander_module_matrix(subject.seifert)
        if args.specialize:
            raise DomainError("--specialize applies to cylinder inputs only")
        result = exterior.generator_lower_bound(matrix, points, seifert.T)
    else:
        result = exterior.handle_number_lower_bound(subject.presentation, subject.rho,
                                                    args.specialize or (), points)
    text = f"bound {result.bound} ({'certified' if result.certified else 'uncertified'})"
    return text, result.to_dict()


COMMANDS: Dict[str, Tuple[Handler, Tuple[str, ...], str]] = {
    "alexander": (_alexander, ("seifert", "cylinder", "exterior"), "normalized Alexander polynomial"),
    "classify": (_classify, ("seifert",), "homological fiberedness verdict"),
    "sigma": (_sigma, ("seifert", "cylinder"), "monodromy matrix sigma"),
    "cylinder": (_cylinder, ("cylinder",), "torsion, Magnus matrix and sigma of a cylinder"),
    "fiber-check": (_fiber_check, ("cylinder",), "fibering obstructions"),
    "torsion": (_torsion, ("cylinder", "exterior"), "torsion class"),
    "factor-check": (_factor_check, ("seifert", "cylinder"), "factorization identities"),
    "bound": (_bound, ("seifert", "cylinder"), "lower bound on the number of generators"),
}


def _drop(value: str):
    return int(value) if value.lstrip('-').isdigit() else value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', metavar='PATH', help='write the machine-readable report to PATH')
    common.add_argument('--strict', action='store_true', help='exit 1 when an obstruction is found')
    common.add_argument('-v', '--verbose', action='store_true', help='log progress to stderr')
    common.add_argument('--config', metavar='PATH', help='alternate config.json')

    parser = argparse.ArgumentParser(prog='homocyl',
                                     description='Invariants of homologically fibered knots and homology cylinders')
    sub = parser.add_subparsers(dest='command', required=True)
    for name, (_, kinds, help_text) in COMMANDS.items():
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument('inputs', nargs='+', help=f"input file(s): {', '.join(kinds)}")
        if name in ("alexander", "torsion"):
            cmd.add_argument('--drop', type=_drop, default=None,
                             help='exterior generator (name or index) whose row is deleted')
        if name == "alexander":
            cmd.add_argument('--var', default='t', help='variable for cylinder inputs')
        if name == "factor-check":
            cmd.add_argument('--mu-var', default='s', help='variable for the meridian')
        if name == "bound":
            cmd.add_argument('--specialize', action='append', metavar='VAR',
                             help='send VAR to 1 before bounding (repeatable)')
            cmd.add_argument('--points', type=int, nargs='+', metavar='A',
                             help='integer evaluation points')

    census = sub.add_parser('pretzel-census', parents=[common],
                            help='homologically fibered odd pretzel knots')
    census.add_argument('--strands', type=int, choices=(3, 5), default=3)
    census.add_argument('--negatives', type=int, choices=(1, 2), default=1,
                        help='number of negative parameters (five strands)')
    census.add_argument('--p-min', type=int)
    census.add_argument('--p-max', type=int)
    census.add_argument('--qr-min', type=int)
    census.add_argument('--qr-max', type=int)
    census.add_argument('--order', choices=pretzel.ORDERS, default=None)
    census.add_argument('--threads', type=int, default=None)
    return parser


def _run_census(args: argparse.Namespace, config: Dict[str, Any], report: Report) -> None:
    settings = config["census"]
    if args.strands == 3:
        ranges = dict(settings["three"])
    else:
        ranges = dict(settings["five_one_negative" if args.negatives == 1 else "five_two_negative"])
        ranges.pop("negatives", None)
    for key in ("p_min", "p_max", "qr_min", "qr_max"):
        if getattr(args, key) is not None:
            ranges[key] = getattr(args, key)
    order = args.order or settings["order"]
    if args.strands == 3:
        types = pretzel.census3(order=order, **ranges)
        leading = pretzel.leading3
    else:
        types = pretzel.census5(negatives=args.negatives, order=order, threads=args.threads, **ranges)
        leading = pretzel.leading5
    for k in types:
        report.add(str(k), str(k), {"params": list(k.params), "leading": str(leading(k))})
    report.inputs = [f"strands={args.strands}"]
    logger.info(f"pretzel-census: {len(types)} types")


def run(args: argparse.Namespace) -> Tuple[Report, int]:
    """Execute one parsed command line."""
    config = load_config(args.config)
    report = Report(command=args.command)
    exit_code = EXIT_OK
    if args.command == "pretzel-census":
        _run_census(args, config, report)
    else:
        handler, kinds, _ = COMMANDS[args.command]
        report.inputs = list(args.inputs)
        multiple = len(args.inputs) > 1
        for path in args.inputs:
            try:
                subject = parse_input(path)
                if subject.kind not in kinds:
                    raise DomainError(f"{args.command} does not accept {subject.kind} input")
                text, data = handler(args, subject, report)
            except (HomocylError, OSError) as e:
                print(describe_error(e, path), file=sys.stderr)
                report.mark("failed")
                report.add(path, None, {"error": str(e), "error_type": type(e).__name__})
                exit_code = EXIT_INPUT_ERROR
                continue
            report.add(path, f"{path}: {text}" if multiple else text, data)
    if exit_code == EXIT_OK and args.strict and report.status == "obstructed":
        exit_code = EXIT_OBSTRUCTED
    return report, exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        print(describe_error(e, args.config), file=sys.stderr)
        return EXIT_INPUT_ERROR
    setup_logging(args.verbose, config["logging"]["file"])
    report, exit_code = run(args)
    if report.lines:
        print(report.human_text)
    if args.json:
        write_json(report, args.json)
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
