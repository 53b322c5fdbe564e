"""
Fibering obstruction check for homology cylinders.

Author: Robert Torres
"""

import logging
from typing import Any, Dict

from ..cli.parser import ParsedInput
from ..exceptions import NotRationalHomologyCylinderError
from ..invariants.cylinder import fibering_report
from .base_check import BaseCheck

logger = logging.getLogger(__name__)


class FiberingObstructionCheck(BaseCheck):
    """Fails when the cylinder carries an obstruction to being a product."""

    check_name = "Fibering Obstruction Check"
    kinds = ("cylinder",)

    def run(self, subject: ParsedInput) -> Dict[str, Any]:
        try:
            report = fibering_report(subject.presentation, subject.rho)
        except NotRationalHomologyCylinderError as e:
            return self._record(subject, [{"type": "singular", "details": str(e)}])
        issues = []
        if not report.torsion_trivial:
            issues.append({"type": "torsion_nontrivial",
                           "details": f"Torsion {report.torsion.value} is not ±monomial"})
        if not report.magnus_integral:
            issues.append({"type": "magnus_non_integral",
                           "details": f"Magnus entries {report.non_integral_entries} are not Laurent polynomials"})
        return self._record(subject, issues, **report.to_dict())
