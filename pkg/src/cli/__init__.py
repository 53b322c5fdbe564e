"""Input parsing and report rendering for the command-line front-end."""

from .parser import ParsedInput, parse_input, parse_text
from .report import REPORT_SCHEMA, Report, validate_report, write_json

__all__ = ['ParsedInput', 'parse_input', 'parse_text', 'REPORT_SCHEMA', 'Report',
           'validate_report', 'write_json']
