"""
Seifert-matrix invariants.

Alexander polynomial det(tS - S^T), the homological fiberedness verdict, the
monodromy matrix sigma = (S^T)^-1 S, the pairing it preserves and the
factorization det(tS - S^T) = det(S^T) det(t sigma - I).

Author: Robert Torres
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy

from ..algebra.field import bareiss_det
from ..algebra.laurent import LaurentPoly, NormalizedAlexander, normalize_alexander
from ..exceptions import DegenerateAlexanderError, DomainError, InputSyntaxError, NotRationalHomologyCylinderError

logger = logging.getLogger(__name__)

T = ('t',)


class Verdict(str, Enum):
    HOMOLOGICALLY_FIBERED = "HomologicallyFibered"
    RATIONALLY_HOMOLOGICALLY_FIBERED = "RationallyHomologicallyFibered"
    NEITHER = "Neither"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer (2g+n-1)-square Seifert matrix of a genus-g surface with n boundary components."""

    g: int
    n: int
    s: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.g < 0 or self.n < 1:
            raise DomainError(f"Invalid surface data g={self.g}, n={self.n}. Need g >= 0, n >= 1")
        rows = tuple(tuple(int(v) for v in row) for row in self.s)
        object.__setattr__(self, 's', rows)
        size = self.size
        if len(rows) != size or any(len(row) != size for row in rows):
            raise DomainError(
                f"Seifert matrix for g={self.g}, n={self.n} must be {size}x{size}, "
                f"got {len(rows)} rows of lengths {[len(r) for r in rows]}")

    @classmethod
    def from_rows(cls, g: int, n: int, rows: Sequence[Sequence[int]]) -> "SeifertMatrix":
        return cls(g, n, tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return 2 * self.g + self.n - 1

    def matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.size, self.size, [v for row in self.s for v in row])

    def intersection_form(self) -> sympy.Matrix:
        m = self.matrix()
        return m - m.T

    def determinant(self) -> int:
        if self.size == 0:
            return 1
        return int(self.matrix().det())


@dataclass
class FiberednessReport:
    """Outcome of classify(); both decision routes are recorded."""

    alexander: Optional[NormalizedAlexander]
    degree_ok: bool
    det_s: int
    verdict: Verdict
    expected_degree: int
    constant_term: Optional[int] = None
    routes_agree: bool = True
    assumes_minimal_genus: bool = True
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alexander": self.alexander.to_dict() if self.alexander else None,
            "degenerate": self.alexander is None,
            "degree_ok": self.degree_ok,
            "expected_degree": self.expected_degree,
            "det_s": self.det_s,
            "constant_term": self.constant_term,
            "verdict": self.verdict.value,
            "routes_agree": self.routes_agree,
            "assumes_minimal_genus": self.assumes_minimal_genus,
            "notes": list(self.notes),
        }


def alexander_module_matrix(sm: SeifertMatrix) -> List[List[LaurentPoly]]:
    """tS - S^T, a presentation matrix of the knot module over Z[t^±]."""
    t = LaurentPoly.variable(T, 't')
    size = sm.size
    return [[t * sm.s[i][j] - sm.s[j][i] for j in range(size)] for i in range(size)]


def alexander_determinant(sm: SeifertMatrix) -> LaurentPoly:
    """det(tS - S^T) before normalization."""
    if sm.size == 0:
        return LaurentPoly.one(T)
    return bareiss_det(alexander_module_matrix(sm))


def alexander(sm: SeifertMatrix) -> NormalizedAlexander:
    """
    Normalized det(tS - S^T).

    Raises:
        DegenerateAlexanderError: the determinant vanishes
    """
    result = normalize_alexander(alexander_determinant(sm))
    logger.info(f"Alexander polynomial of {sm.size}x{sm.size} Seifert matrix: {result}")
    return result


def classify(sm: SeifertMatrix) -> FiberednessReport:
    """
    Decide (rational) homological fiberedness.

    The verdict comes from det S; the degree and constant-term conditions on the
    Alexander polynomial are computed independently and must agree.
    """
    det_s = sm.determinant()
    expected = sm.size
    if det_s in (1, -1):
        by_det = Verdict.HOMOLOGICALLY_FIBERED
    elif det_s != 0:
        by_det = Verdict.RATIONALLY_HOMOLOGICALLY_FIBERED
    else:
        by_det = Verdict.NEITHER

    try:
        poly: Optional[NormalizedAlexander] = alexander(sm)
    except DegenerateAlexanderError:
        poly = None

    if poly is None:
        by_alexander = Verdict.DEGENERATE
        degree_ok = False
        constant = None
    else:
        degree_ok = poly.degree == expected
        constant = int(poly.poly.constant_term())
        if degree_ok and abs(constant) == 1:
            by_alexander = Verdict.HOMOLOGICALLY_FIBERED
        elif degree_ok:
            by_alexander = Verdict.RATIONALLY_HOMOLOGICALLY_FIBERED
        else:
            by_alexander = Verdict.NEITHER

    verdict = Verdict.DEGENERATE if poly is None else by_det
    agree = by_det == by_alexander or (poly is None and by_det == Verdict.NEITHER)
    report = FiberednessReport(
        alexander=poly, degree_ok=degree_ok, det_s=det_s, verdict=verdict,
        expected_degree=expected, constant_term=constant, routes_agree=agree)
    if not agree:
        report.notes.append(
            f"det S route gives {by_det.value}, Alexander route gives {by_alexander.value}")
        logger.warning(f"Fiberedness routes disagree: {report.notes[-1]}")
    if sm.n > 1:
        report.notes.append("n > 1: only the full pairing identity is asserted, not the block form")
    return report


def sigma(sm: SeifertMatrix) -> sympy.Matrix:
    """
    Monodromy matrix (S^T)^-1 S over the rationals.

    Raises:
        NotRationalHomologyCylinderError: det S = 0
    """
    if sm.determinant() == 0:
        raise NotRationalHomologyCylinderError(
            "Seifert matrix is singular: the complementary sutured manifold is not a "
            "rational homology cylinder")
    if sm.size == 0:
        return sympy.zeros(0, 0)
    s = sm.matrix()
    return s.T.inv() * s


def check_pairing_preserved(sm: SeifertMatrix) -> bool:
    """True iff M^T (S - S^T) M = S - S^T for M = sigma(sm)."""
    m = sigma(sm)
    form = sm.intersection_form()
    return (m.T * form * m - form).is_zero_matrix


def factor_check(sm: SeifertMatrix) -> bool:
    """True iff det(tS - S^T) equals det(S^T) det(t sigma - I) exactly."""
    lhs = alexander_determinant(sm)
    m = sigma(sm)
    t = LaurentPoly.variable(T, 't')
    size = sm.size
    if size == 0:
        return lhs == LaurentPoly.one(T)
    rows = [[t * _fraction(m[i, j]) - (1 if i == j else 0) for j in range(size)]
            for i in range(size)]
    rhs = bareiss_det(rows).scale(sm.determinant())
    return lhs == rhs


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def matrix_to_lists(m: sympy.Matrix) -> List[List[str]]:
    """Render a rational matrix entrywise (integers stay integers)."""
    return [[str(sympy.Rational(m[i, j])) for j in range(m.cols)] for i in range(m.rows)]


def load_seifert(text: str, path: Optional[str] = None) -> SeifertMatrix:
    """
    Parse a Seifert matrix file: `g n` on the first line, then 2g+n-1 rows of
    whitespace-separated integers. `#` starts a comment.

    Raises:
        InputSyntaxError: malformed header, non-integer entry or wrong row count
    """
    rows: List[Tuple[int, List[int]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        if not line.strip():
            continue
        values = []
        column = 0
        for token in line.split():
            column = line.index(token, column) + 1
            try:
                values.append(int(token))
            except ValueError:
                raise InputSyntaxError(f"Expected an integer, got {token!r}", path, number, column) from None
            column += len(token) - 1
        rows.append((number, values))
    if not rows:
        raise InputSyntaxError("Empty Seifert matrix file", path, 1, 1)
    header_line, header = rows[0]
    if len(header) != 2:
        raise InputSyntaxError(f"Header must be 'g n', got {len(header)} value(s)", path, header_line, 1)
    g, n = header
    body = rows[1:]
    size = 2 * g + n - 1
    if len(body) != size:
        line = body[-1][0] if body else header_line
        raise InputSyntaxError(f"Expected {size} matrix rows for g={g}, n={n}, got {len(body)}",
                               path, line, 1)
    for number, values in body:
        if len(values) != size:
            raise InputSyntaxError(f"Row has {len(values)} entries, expected {size}", path, number, 1)
    return SeifertMatrix.from_rows(g, n, [values for _, values in body])
