"""
Base class for invariant checks.

Author: Robert Torres
"""

from abc import ABC, abstractmethod
from datetime import datetime
from typing import Any, Dict, List

from ..cli.parser import ParsedInput


class BaseCheck(ABC):
    """Base class for checks run on parsed input files."""

    check_name = "Base Check"
    kinds: tuple = ()

    def __init__(self):
        """Initialize the check."""
        self.results = {}

    def applies_to(self, subject: ParsedInput) -> bool:
        return subject.kind in self.kinds

    @abstractmethod
    def run(self, subject: ParsedInput) -> Dict[str, Any]:
        """
        Run the check.

        Args:
            subject: Parsed input file

        Returns:
            Dictionary containing check results
        """
        pass

    def get_results(self) -> Dict[str, Any]:
        """Get the results of the last check run."""
        return self.results

    def _record(self, subject: ParsedInput, issues: List[Dict[str, Any]], **extra: Any) -> Dict[str, Any]:
        self.results = {
            "check_name": self.check_name,
            "input": subject.path or subject.name,
            "status": "failed" if issues else "passed",
            "timestamp": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "issues": issues,
            **extra,
        }
        return self.results
