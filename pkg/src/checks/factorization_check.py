"""
Factorization check: exterior torsion of the closed-up cylinder against the
cylinder's torsion and Magnus matrix.

Author: Robert Torres
"""

from typing import Any, Dict

from ..cli.parser import ParsedInput
from ..exceptions import HomocylError
from ..invariants.exterior import factorization_with_closure
from .base_check import BaseCheck


class FactorizationCheck(BaseCheck):

    check_name = "Factorization Check"
    kinds = ("cylinder",)

    def __init__(self, mu_var: str = "s"):
        super().__init__()
        self.mu_var = mu_var

    def run(self, subject: ParsedInput) -> Dict[str, Any]:
        try:
            result = factorization_with_closure(subject.presentation, subject.rho, self.mu_var)
        except HomocylError as e:
            return self._record(subject, [{"type": "undefined", "details": str(e)}])
        issues = []
        if not result.holds:
            issues.append({"type": "mismatch",
                           "details": f"exterior {result.exterior.value} vs cylinder {result.product.value}"})
        return self._record(subject, issues, **result.to_dict())
