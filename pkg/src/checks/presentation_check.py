"""
Presentation check: structure, rho homomorphism and acyclicity.

Author: Robert Torres
"""

import logging
from typing import Any, Dict, List

from ..cli.parser import ParsedInput
from ..exceptions import HomocylError, InvalidDropError, NotRationalHomologyCylinderError
from ..invariants.cylinder import torsion_plus, validate
from ..invariants.exterior import torsion_exterior
from .base_check import BaseCheck

logger = logging.getLogger(__name__)


class PresentationCheck(BaseCheck):
    """
    Cylinder files: structural issues, rho(relator) = 1 and det(A;B) != 0.
    Exterior files: the torsion is defined and independent of the dropped generator.
    """

    check_name = "Presentation Check"
    kinds = ("cylinder", "exterior")

    def run(self, subject: ParsedInput) -> Dict[str, Any]:
        if subject.kind == "cylinder":
            return self._run_cylinder(subject)
        return self._run_exterior(subject)

    def _run_cylinder(self, subject: ParsedInput) -> Dict[str, Any]:
        p, rho = subject.presentation, subject.rho
        issues = validate(p, rho)
        if not issues:
            try:
                torsion_plus(p, rho)
            except NotRationalHomologyCylinderError as e:
                issues.append({"type": "singular", "details": str(e)})
        return self._record(subject, issues, generators=len(p.generators),
                            relators=len(p.relators), rank=p.rank)

    def _run_exterior(self, subject: ParsedInput) -> Dict[str, Any]:
        q = subject.exterior
        issues: List[Dict[str, Any]] = list(q.issues())
        classes = {}
        for gen in q.generators:
            try:
                classes[gen] = torsion_exterior(q, gen)
            except InvalidDropError:
                continue
            except HomocylError as e:
                issues.append({"type": "non_acyclic", "generator": gen, "details": str(e)})
                break
        if classes and not issues:
            first_gen, first = next(iter(classes.items()))
            for gen, value in classes.items():
                if value != first:
                    issues.append({"type": "drop_dependence", "generator": gen,
                                   "details": f"Dropping {gen} gives {value}, dropping {first_gen} gives {first}"})
        torsion = str(next(iter(classes.values())).value) if classes else None
        return self._record(subject, issues, generators=len(q.generators),
                            relators=len(q.relators), torsion=torsion)
