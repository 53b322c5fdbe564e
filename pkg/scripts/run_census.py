#!/usr/bin/env python3
"""
Run the pretzel censuses with the ranges in config.json and save one JSON
summary per census under data/census.
"""

import argparse
import json
import logging
import os
import sys
from datetime import datetime

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.config import PROJECT_ROOT, load_config, setup_logging, thread_count  # noqa: E402
from src.invariants.pretzel import census3, census5, census_summary  # noqa: E402

logger = logging.getLogger(__name__)

CENSUSES = ("three", "five_one_negative", "five_two_negative")


def run_census(name, settings, order, threads):
    ranges = dict(settings[name])
    if name == "three":
        types = census3(order=order, **ranges)
        return census_summary(types, 3, ranges)
    negatives = ranges.pop("negatives")
    types = census5(negatives=negatives, order=order, threads=threads, **ranges)
    return census_summary(types, 5, {"negatives": negatives, **ranges})


def main():
    parser = argparse.ArgumentParser(description="Run the pretzel censuses and save the results")
    parser.add_argument('censuses', nargs='*', choices=CENSUSES, default=list(CENSUSES))
    parser.add_argument('--output-dir', default=str(PROJECT_ROOT / "data" / "census"))
    parser.add_argument('-v', '--verbose', action='store_true')
    args = parser.parse_args()

    setup_logging(args.verbose)
    config = load_config()
    settings = config["census"]
    threads = thread_count()
    os.makedirs(args.output_dir, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

    for name in args.censuses:
        logger.info(f"Running census {name} with {threads} thread(s)")
        summary = run_census(name, settings, settings["order"], threads)
        filename = os.path.join(args.output_dir, f"{timestamp}_{name}.json")
        with open(filename, 'w') as f:
            json.dump(summary, f, indent=2)
        print(f"{name}: {summary['count']} types -> {filename}")


if __name__ == "__main__":
    main()
