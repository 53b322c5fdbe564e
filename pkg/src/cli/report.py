"""
Report rendering.

A Report holds the human-readable lines printed on stdout and the machine
document written with --json. The machine document is validated against
REPORT_SCHEMA before it is written.

Author: Robert Torres
"""

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import jsonschema

from ..exceptions import (
    DegenerateAlexanderError,
    InputSyntaxError,
    InvalidDropError,
    NonAcyclicError,
    NotRationalHomologyCylinderError,
    PresentationError,
    UnknownGeneratorError,
)

logger = logging.getLogger(__name__)

CONVENTIONS = {
    "fox_derivative": "left",
    "matrix_layout": "rows are generators, columns are relators",
    "involution": "applied after rho",
    "normalization": "Alexander polynomials shifted to start at t^0 with positive constant term",
    "torsion": "classes up to ±monomial",
}

STATUSES = ("ok", "obstructed", "failed")

REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["command", "status", "inputs", "results", "conventions"],
    "properties": {
        "command": {"type": "string"},
        "status": {"enum": list(STATUSES)},
        "inputs": {"type": "array", "items": {"type": "string"}},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["input"],
                "properties": {"input": {"type": "string"}},
            },
        },
        "conventions": {
            "type": "object",
            "required": list(CONVENTIONS),
            "additionalProperties": {"type": "string"},
        },
    },
}


@dataclass
class Report:
    command: str
    inputs: List[str] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)
    results: List[Dict[str, Any]] = field(default_factory=list)
    status: str = "ok"

    def add(self, input_name: str, text: Optional[str], data: Dict[str, Any]) -> None:
        """Record one result: its text (if any) and its machine form."""
        if text is not None:
            self.lines.append(text)
        self.results.append({"input": input_name, **data})

    def mark(self, status: str) -> None:
        """Raise the status; 'failed' beats 'obstructed' beats 'ok'."""
        if STATUSES.index(status) > STATUSES.index(self.status):
            self.status = status

    @property
    def human_text(self) -> str:
        return "\n".join(self.lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "status": self.status,
            "inputs": list(self.inputs),
            "results": self.results,
            "conventions": dict(CONVENTIONS),
        }


def validate_report(document: Dict[str, Any]) -> None:
    """Raise jsonschema.ValidationError if document does not match REPORT_SCHEMA."""
    jsonschema.validate(instance=document, schema=REPORT_SCHEMA)


def write_json(report: Report, path: str) -> Dict[str, Any]:
    """Validate and write the machine form of report to path."""
    document = report.to_dict()
    try:
        validate_report(document)
    except jsonschema.ValidationError as e:
        logger.error(f"Error in report schema: {e.message}")
        raise
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w') as f:
        json.dump(document, f, indent=2)
    logger.info(f"Wrote JSON report to {path}")
    return document


def format_matrix(rows: List[List[str]], indent: str = "  ") -> str:
    """Column-aligned rendering of a string matrix."""
    if not rows:
        return f"{indent}[]"
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return "\n".join(indent + "[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]"
                     for row in rows)


def describe_error(error: Exception, path: Optional[str] = None) -> str:
    """One-line error message with a remediation hint."""
    hints = [
        (InputSyntaxError, "check the file against the input grammar in the README"),
        (UnknownGeneratorError, "add the missing generator(s) to the [rho] block"),
        (PresentationError, "check generator lists, relator count and rho(relator) = 1"),
        (NotRationalHomologyCylinderError, "the data is not a rational homology cylinder for this rho"),
        (NonAcyclicError, "the Alexander polynomial vanishes; try a different rho"),
        (InvalidDropError, "use --drop with a generator whose rho-image is nontrivial"),
        (DegenerateAlexanderError, "the Seifert form is degenerate"),
        (OSError, "check that the input path exists and is readable"),
    ]
    hint = next((text for kind, text in hints if isinstance(error, kind)), None)
    prefix = f"{path}: " if path and path not in str(error) else ""
    message = f"error: {prefix}{error}"
    return f"{message} (hint: {hint})" if hint else message
