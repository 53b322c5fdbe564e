"""
Input file parser.

Three line-oriented formats, `#` starts a comment:

    Seifert matrix        `g n` then 2g+n-1 integer rows
    [cylinder] g=.. n=..  minus:/aux:/plus:/rel: lines, then a [rho] block
    [exterior]            gens:/mu:/rel: lines, then a [rho] block

The [rho] block is `[rho] vars: t1 t2` followed by `generator -> monomial`
lines. Images of generators a relator pins down are inferred; explicit
images are cross-checked against the relators.

Author: Robert Torres
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..algebra.laurent import LaurentPoly
from ..algebra.word import MonomialMap, Word, check_generator_name
from ..exceptions import DomainError, InputSyntaxError, PresentationError
from ..invariants.cylinder import AbelianRho, AdmissiblePresentation, infer_images, require_valid
from ..invariants.exterior import ExteriorPresentation
from ..invariants.seifert import SeifertMatrix, load_seifert

logger = logging.getLogger(__name__)

KINDS = ("seifert", "cylinder", "exterior")
_SECTION_RE = re.compile(r'^\s*\[(\w+)\](.*)$')
_KEY_RE = re.compile(r'^\s*(\w+)\s*:(.*)$')
_PARAM_RE = re.compile(r'(\w+)\s*=\s*(-?\d+)')


@dataclass
class ParsedInput:
    """One input file, parsed and validated."""

    kind: str
    path: Optional[str] = None
    seifert: Optional[SeifertMatrix] = None
    presentation: Optional[AdmissiblePresentation] = None
    rho: Optional[AbelianRho] = None
    exterior: Optional[ExteriorPresentation] = None

    @property
    def name(self) -> str:
        return Path(self.path).stem if self.path else "<input>"


@dataclass
class _Line:
    number: int
    text: str


@dataclass
class _RhoBlock:
    variables: Tuple[str, ...] = ()
    entries: List[Tuple[_Line, str, str]] = field(default_factory=list)
    line: Optional[_Line] = None


def _content_lines(text: str) -> List[_Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].rstrip()
        if content.strip():
            lines.append(_Line(number, content))
    return lines


def _column(line: _Line, fragment: str) -> int:
    position = line.text.find(fragment)
    return position + 1 if position >= 0 else 1


def _names(line: _Line, value: str, path: Optional[str]) -> Tuple[str, ...]:
    names = []
    for token in value.split():
        try:
            names.append(check_generator_name(token))
        except DomainError as e:
            raise InputSyntaxError(str(e), path, line.number, _column(line, token)) from None
    return tuple(names)


def _word(line: _Line, value: str, path: Optional[str]) -> Word:
    try:
        return Word.parse(value)
    except DomainError as e:
        bad = next((tok for tok in value.split() if not re.fullmatch(r'[A-Za-z0-9_]+(\^[+-]?\d+)?', tok)),
                   value.strip())
        raise InputSyntaxError(str(e), path, line.number, _column(line, bad)) from None


def _split_rho(lines: List[_Line], path: Optional[str]) -> Tuple[List[_Line], _RhoBlock]:
    """Separate the [rho] block from the body; body lines keep their order."""
    body: List[_Line] = []
    block = _RhoBlock()
    in_rho = False
    for line in lines:
        section = _SECTION_RE.match(line.text)
        if section and section.group(1) == "rho":
            if block.line is not None:
                raise InputSyntaxError("Duplicate [rho] block", path, line.number, 1)
            key = _KEY_RE.match(section.group(2))
            if not key or key.group(1) != "vars":
                raise InputSyntaxError("Expected '[rho] vars: <names>'", path, line.number,
                                       _column(line, section.group(2).strip() or "]"))
            block.variables = _names(line, key.group(2), path)
            if not block.variables:
                raise InputSyntaxError("[rho] declares no variables", path, line.number, 1)
            block.line = line
            in_rho = True
            continue
        if in_rho:
            if '->' not in line.text:
                raise InputSyntaxError(f"Expected 'generator -> monomial', got {line.text.strip()!r}",
                                       path, line.number, 1)
            gen, image = (part.strip() for part in line.text.split('->', 1))
            block.entries.append((line, gen, image))
        else:
            body.append(line)
    if block.line is None:
        raise InputSyntaxError("Missing [rho] block", path, lines[-1].number if lines else 1, 1)
    return body, block


def _partial_rho(block: _RhoBlock, path: Optional[str]) -> MonomialMap:
    exponents: Dict[str, Tuple[int, ...]] = {}
    for line, gen, image in block.entries:
        try:
            check_generator_name(gen)
            poly = LaurentPoly.parse(image, block.variables)
            vector = MonomialMap.from_monomials(block.variables, {gen: poly})[gen]
        except DomainError as e:
            raise InputSyntaxError(str(e), path, line.number, _column(line, image)) from None
        if gen in exponents and exponents[gen] != vector:
            raise InputSyntaxError(f"Conflicting images for {gen}", path, line.number, 1)
        exponents[gen] = vector
    return MonomialMap(block.variables, exponents)


def _header_params(line: _Line, rest: str, path: Optional[str]) -> Dict[str, int]:
    params = {key: int(value) for key, value in _PARAM_RE.findall(rest)}
    leftover = _PARAM_RE.sub('', rest).strip()
    if leftover:
        raise InputSyntaxError(f"Unexpected header text {leftover!r}", path, line.number,
                               _column(line, leftover))
    return params


def _parse_cylinder(lines: List[_Line], path: Optional[str]) -> ParsedInput:
    header = lines[0]
    params = _header_params(header, _SECTION_RE.match(header.text).group(2), path)
    for key in ("g", "n"):
        if key not in params:
            raise InputSyntaxError(f"[cylinder] header is missing {key}=", path, header.number, 1)
    body, block = _split_rho(lines[1:], path)
    groups: Dict[str, Tuple[str, ...]] = {"minus": (), "aux": (), "plus": ()}
    relators: List[Word] = []
    for line in body:
        match = _KEY_RE.match(line.text)
        if not match:
            raise InputSyntaxError(f"Expected 'key: value', got {line.text.strip()!r}", path, line.number, 1)
        key, value = match.group(1), match.group(2)
        if key in groups:
            groups[key] = groups[key] + _names(line, value, path)
        elif key == "rel":
            relators.append(_word(line, value, path))
        else:
            raise InputSyntaxError(f"Unknown key {key!r} in [cylinder] section", path, line.number,
                                   _column(line, key))
    presentation = AdmissiblePresentation(params["g"], params["n"], groups["minus"], groups["aux"],
                                          groups["plus"], tuple(relators))
    issues = presentation.structural_issues()
    if issues:
        summary = "; ".join(issue["details"] for issue in issues)
        raise PresentationError(f"{path or '<input>'}: {summary}", issues)
    rho = AbelianRho(infer_images(presentation.generators, presentation.relators,
                                  _partial_rho(block, path)))
    require_valid(presentation, rho)
    return ParsedInput(kind="cylinder", path=path, presentation=presentation, rho=rho)


def _parse_exterior(lines: List[_Line], path: Optional[str]) -> ParsedInput:
    body, block = _split_rho(lines[1:], path)
    generators: Tuple[str, ...] = ()
    mu: Optional[str] = None
    relators: List[Word] = []
    for line in body:
        match = _KEY_RE.match(line.text)
        if not match:
            raise InputSyntaxError(f"Expected 'key: value', got {line.text.strip()!r}", path, line.number, 1)
        key, value = match.group(1), match.group(2)
        if key == "gens":
            generators = generators + _names(line, value, path)
        elif key == "mu":
            names = _names(line, value, path)
            if len(names) != 1:
                raise InputSyntaxError("mu: takes exactly one generator", path, line.number, 1)
            mu = names[0]
        elif key == "rel":
            relators.append(_word(line, value, path))
        else:
            raise InputSyntaxError(f"Unknown key {key!r} in [exterior] section", path, line.number,
                                   _column(line, key))
    rho = infer_images(generators, relators, _partial_rho(block, path))
    exterior = ExteriorPresentation(generators=generators, relators=tuple(relators), rho=rho, mu=mu)
    return ParsedInput(kind="exterior", path=path, exterior=exterior)


def parse_text(text: str, path: Optional[str] = None) -> ParsedInput:
    """
    Parse input text of any supported kind.

    Raises:
        InputSyntaxError: malformed text, with line and column
        PresentationError: well-formed but invalid presentation or rho
        UnknownGeneratorError: rho cannot be determined on some generator
    """
    lines = _content_lines(text)
    if not lines:
        raise InputSyntaxError("Empty input", path, 1, 1)
    section = _SECTION_RE.match(lines[0].text)
    if section is None:
        return ParsedInput(kind="seifert", path=path, seifert=load_seifert(text, path))
    kind = section.group(1)
    if kind == "cylinder":
        result = _parse_cylinder(lines, path)
    elif kind == "exterior":
        result = _parse_exterior(lines, path)
    else:
        raise InputSyntaxError(f"Unknown section [{kind}]. Must be one of: [cylinder], [exterior]",
                               path, lines[0].number, 2)
    logger.info(f"Parsed {result.kind} input {path or '<input>'}")
    return result


def parse_input(path: str) -> ParsedInput:
    """Read and parse one input file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        logger.error(f"Error reading {path}: {e}")
        raise
    return parse_text(text, str(path))
