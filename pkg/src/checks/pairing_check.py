"""
Seifert matrix check: sigma preserves the intersection pairing and the
Alexander polynomial factors through it.

Author: Robert Torres
"""

from typing import Any, Dict

from ..cli.parser import ParsedInput
from ..invariants.seifert import check_pairing_preserved, classify, factor_check, matrix_to_lists, sigma
from .base_check import BaseCheck


class PairingCheck(BaseCheck):
    """Check sigma = (S^T)^-1 S against the identities it must satisfy."""

    check_name = "Pairing Check"
    kinds = ("seifert",)

    def run(self, subject: ParsedInput) -> Dict[str, Any]:
        sm = subject.seifert
        report = classify(sm)
        issues = []
        if report.det_s == 0:
            issues.append({"type": "singular",
                           "details": "det S = 0: sigma is undefined"})
            return self._record(subject, issues, verdict=report.verdict.value, det_s=0)
        m = sigma(sm)
        if not check_pairing_preserved(sm):
            issues.append({"type": "pairing", "details": "sigma^T (S - S^T) sigma != S - S^T"})
        if m.det() != 1:
            issues.append({"type": "determinant", "details": f"det sigma = {m.det()}, expected 1"})
        if not factor_check(sm):
            issues.append({"type": "factorization",
                           "details": "det(tS - S^T) != det(S^T) det(t sigma - I)"})
        if not report.routes_agree:
            issues.append({"type": "verdict_routes", "details": "; ".join(report.notes)})
        return self._record(subject, issues, verdict=report.verdict.value, det_s=report.det_s,
                            sigma=matrix_to_lists(m))
