"""
Configuration loading and logging setup.

Settings come from config.json at the repository root; environment
variables (optionally from a .env file) override a few of them.

Author: Robert Torres
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config.json"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

DEFAULT_CONFIG: Dict[str, Any] = {
    "census": {
        "three": {"p_min": -99, "p_max": -3, "qr_min": 3, "qr_max": 99},
        "five_one_negative": {"negatives": 1, "p_min": -499, "p_max": -3,
                              "qr_min": 3, "qr_max": 499},
        "five_two_negative": {"negatives": 2, "p_min": -299, "p_max": -3,
                              "qr_min": 3, "qr_max": 299},
        "order": "published",
    },
    "bound": {"evaluation_points": [2, -2, 3, -3, 5, -5, 7]},
    "reports": {"results_dir": "data/check_results", "save_reports": True},
    "logging": {"file": None},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from file.

    Args:
        config_path: Explicit path; falls back to HOMOCYL_CONFIG, then config.json

    Returns:
        Configuration dictionary, defaults filled in for missing keys
    """
    path = Path(config_path or os.getenv('HOMOCYL_CONFIG', str(DEFAULT_CONFIG_PATH)))
    if not path.exists():
        logger.warning(f"Config file {path} not found. Using default configuration.")
        return copy.deepcopy(DEFAULT_CONFIG)
    try:
        with open(path, 'r') as f:
            return _merge(DEFAULT_CONFIG, json.load(f))
    except json.JSONDecodeError as e:
        logger.error(f"Error loading configuration {path}: {e}")
        raise


def thread_count() -> int:
    """Worker cap for census scans, from HOMOCYL_THREADS (default 1)."""
    raw = os.getenv('HOMOCYL_THREADS', '1')
    try:
        threads = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer HOMOCYL_THREADS={raw!r}")
        return 1
    return max(1, threads)


def setup_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """
    Configure root logging for command-line use.

    Reports go to stdout, so log records only go to stderr and the optional file.
    """
    level_name = os.getenv('HOMOCYL_LOG_LEVEL', 'INFO' if verbose else 'WARNING')
    level = getattr(logging, level_name.upper(), logging.WARNING)
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
