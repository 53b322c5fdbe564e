"""Invariant checks producing JSON result records."""

from .base_check import BaseCheck
from .factorization_check import FactorizationCheck
from .fibering_check import FiberingObstructionCheck
from .pairing_check import PairingCheck
from .presentation_check import PresentationCheck
from .run_checks import run_all_checks

__all__ = ['BaseCheck', 'FactorizationCheck', 'FiberingObstructionCheck', 'PairingCheck',
           'PresentationCheck', 'run_all_checks']
