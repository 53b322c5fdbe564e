#!/usr/bin/env python3
"""Run every invariant check on the input corpus and print a summary."""

import argparse
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.checks.run_checks import default_checks, run_all_checks  # noqa: E402
from src.config import PROJECT_ROOT, setup_logging  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description="Run invariant checks on input files")
    parser.add_argument('paths', nargs='*', default=[str(PROJECT_ROOT / "data" / "inputs")])
    parser.add_argument('--results-dir', default=None, help='override reports.results_dir')
    parser.add_argument('--no-save', action='store_true', help='do not write JSON result files')
    parser.add_argument('--mu-var', default='s', help='meridian variable for the factorization check')
    parser.add_argument('-v', '--verbose', action='store_true')
    args = parser.parse_args()

    setup_logging(args.verbose)
    results = run_all_checks(args.paths, results_dir=args.results_dir,
                             checks=default_checks(args.mu_var),
                             save=False if args.no_save else None)
    for result in results:
        name = os.path.basename(result["input"])
        print(f"{result['status'].upper():7} {name:28} {result['check_name']}")
        for issue in result["issues"]:
            print(f"        - {issue['type']}: {issue.get('details', '')}")
    failed = sum(1 for r in results if r["status"] == "failed")
    print(f"\n{len(results)} checks, {failed} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
