"""
Homology Cylinder Invariants - Test Configuration

This module provides pytest fixtures and constants for:
1. The input corpus under data/inputs
2. The P(-3,5,9) worked example (presentation, rho, printed matrices)
3. Seifert matrices of small knots
4. Seeded random generators for property tests

Author: Robert Torres
"""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to Python path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.algebra.field import RationalFunction  # noqa: E402
from src.algebra.laurent import LaurentPoly  # noqa: E402
from src.cli.parser import parse_input  # noqa: E402
from src.invariants.seifert import SeifertMatrix  # noqa: E402

# Test Constants
PROJECT_ROOT = Path(__file__).resolve().parent.parent
INPUTS_DIR = PROJECT_ROOT / "data" / "inputs"
T2 = ("t1", "t2")

G1_PRINTED = [
    ["t1 - t1*t2^-1 - t2^-2", "-t1^-2*t2^-7 - t1^-1*t2^-6 - t2^-5"],
    ["-t1 - t2^-1", "-t1^-2*t2^-6 - t1^-1*t2^-5 - t2^-4 - t2^-3 - t2^-2 - t2^-1 - 1"],
]
G2_PRINTED = [
    ["t1 - t1*t2^-1 - t2^-2", "-t1^-1*t2^-6 - t2^-5"],
    ["-t1^-1*t2^-2 - t1 - t2^-1", "-t1^-2*t2^-6 - t1^-1*t2^-5 - t2^-4 - t2^-3 - t2^-2 - t2^-1 - 1"],
]
DET_G2_PRINTED = "-t1^-1*t2^-6 - t1 + t2^-4 + t2^-3 + t2^-2"

_MAGNUS_DEN = "1 - t1*t2^2 - t1*t2^3 - t1*t2^4 + t1^2*t2^6"
MAGNUS_PRINTED = [
    [("-1 - t1*t2 + t1*t2^2 - t1^2*t2^4 - t1^2*t2^5 - t1^2*t2^6 + t1^3*t2^8", "t1*t2^2", _MAGNUS_DEN),
     ("-1 - t1*t2 - t1^2*t2^2 - t1^2*t2^3 - t1^2*t2^4 - t1^2*t2^5 - t1^2*t2^6", "t1^3*t2^7", _MAGNUS_DEN)],
    [("t2^2 + t1*t2^3 - t1*t2^4", "1", _MAGNUS_DEN),
     ("1 + t1*t2 + t1^2*t2^2 + t1^2*t2^3 - t1^3*t2^5 - t1^3*t2^6 - t1^3*t2^7 + t1^4*t2^9",
      "t1^2*t2^3", _MAGNUS_DEN)],
]


def poly(text, variables=T2):
    return LaurentPoly.parse(text, variables)


def printed_magnus():
    return [[RationalFunction(poly(num), poly(mono) * poly(den)) for num, mono, den in row]
            for row in MAGNUS_PRINTED]


@pytest.fixture(scope="session")
def inputs_dir():
    """Directory of corpus input files."""
    return INPUTS_DIR


@pytest.fixture(scope="session")
def p359():
    """Parsed P(-3,5,9) cylinder: (presentation, rho)."""
    parsed = parse_input(str(INPUTS_DIR / "p359.cyl"))
    return parsed.presentation, parsed.rho


@pytest.fixture(scope="session")
def identity_cylinder():
    parsed = parse_input(str(INPUTS_DIR / "identity.cyl"))
    return parsed.presentation, parsed.rho


@pytest.fixture(scope="session")
def trefoil_monodromy():
    parsed = parse_input(str(INPUTS_DIR / "trefoil_monodromy.cyl"))
    return parsed.presentation, parsed.rho


@pytest.fixture(scope="session")
def trefoil_seifert():
    return SeifertMatrix.from_rows(1, 1, [[-1, 1], [0, -1]])


@pytest.fixture(scope="session")
def figure_eight_seifert():
    return SeifertMatrix.from_rows(1, 1, [[1, 1], [0, -1]])


@pytest.fixture(scope="session")
def knot_9_46_seifert():
    return SeifertMatrix.from_rows(1, 1, [[0, -1], [-2, 0]])


@pytest.fixture(scope="function")
def rng():
    """Seeded numpy generator; each test gets a fresh stream."""
    return np.random.default_rng(20240531)


def random_invertible_seifert(rng, max_size=6, bound=3):
    """Random integer Seifert matrix of size at most max_size with nonzero determinant."""
    while True:
        g = int(rng.integers(0, max_size // 2 + 1))
        n = int(rng.integers(1, max_size - 2 * g + 2))
        size = 2 * g + n - 1
        if size == 0 or size > max_size:
            continue
        rows = rng.integers(-bound, bound + 1, size=(size, size)).tolist()
        sm = SeifertMatrix.from_rows(g, n, rows)
        if sm.determinant() != 0:
            return sm


@pytest.fixture(scope="session")
def g_blocks():
    """Printed G1, G2 blocks of the P(-3,5,9) example and det G2."""
    return ([[poly(x) for x in row] for row in G1_PRINTED],
            [[poly(x) for x in row] for row in G2_PRINTED],
            poly(DET_G2_PRINTED))


@pytest.fixture(scope="session")
def magnus_printed():
    return printed_magnus()


@pytest.fixture(scope="session")
def random_seifert():
    return random_invertible_seifert


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the full five-strand census scans")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full census scans, skipped without --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
