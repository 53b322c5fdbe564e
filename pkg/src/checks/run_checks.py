"""Run invariant checks on a corpus of input files."""

import json
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from ..cli.parser import parse_input
from ..config import load_config
from ..exceptions import HomocylError
from .base_check import BaseCheck
from .factorization_check import FactorizationCheck
from .fibering_check import FiberingObstructionCheck
from .pairing_check import PairingCheck
from .presentation_check import PresentationCheck

logger = logging.getLogger(__name__)

INPUT_SUFFIXES = (".seifert", ".cyl", ".ext")


def default_checks(mu_var: str = "s") -> List[BaseCheck]:
    return [PresentationCheck(), PairingCheck(), FiberingObstructionCheck(), FactorizationCheck(mu_var)]


def collect_inputs(paths: Iterable[str]) -> List[str]:
    """Expand directories into their input files, sorted by name."""
    files = []
    for path in paths:
        p = Path(path)
        if p.is_dir():
            files.extend(sorted(str(f) for f in p.iterdir() if f.suffix in INPUT_SUFFIXES))
        else:
            files.append(str(p))
    return files


def parse_failure(path: str, error: Exception) -> Dict[str, Any]:
    return {
        "check_name": "Input Parse Check",
        "input": path,
        "status": "failed",
        "timestamp": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        "issues": [{"type": type(error).__name__, "details": str(error)}],
    }


def run_all_checks(paths: Iterable[str], results_dir: Optional[str] = None,
                   checks: Optional[List[BaseCheck]] = None,
                   save: Optional[bool] = None) -> List[Dict[str, Any]]:
    """Run every applicable check on every input and save the results."""
    config = load_config()
    if results_dir is None:
        results_dir = config["reports"]["results_dir"]
    if save is None:
        save = config["reports"]["save_reports"]
    checks = checks if checks is not None else default_checks()

    results = []
    for path in collect_inputs(paths):
        try:
            subject = parse_input(path)
        except (HomocylError, OSError) as e:
            logger.warning(f"Skipping {path}: {e}")
            results.append(parse_failure(path, e))
            continue
        for check in checks:
            if check.applies_to(subject):
                results.append(check.run(subject))

    if save:
        os.makedirs(results_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        for i, result in enumerate(results):
            stem = Path(result["input"]).stem
            filename = f"{timestamp}_{i:03d}_{stem}_{result['check_name'].replace(' ', '')}.json"
            with open(os.path.join(results_dir, filename), 'w') as f:
                json.dump(result, f, indent=2)
        logger.info(f"Saved {len(results)} check results to {results_dir}")
    failed = sum(1 for r in results if r["status"] == "failed")
    logger.info(f"{len(results)} checks run, {failed} failed")
    return results
