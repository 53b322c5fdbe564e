"""
Rational functions over the Laurent ring, matrices over them, and torsion classes.

No multivariate GCD is ever taken: rational functions are canonicalized by
integer content, monomial content, sign and exact division when the
denominator divides the numerator. Equality is decided by
cross-multiplication. Determinants clear denominators row by row and run
fraction-free Bareiss elimination with exact Laurent division.

Author: Robert Torres
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from ..exceptions import (
    DomainError,
    ExactDivisionError,
    SingularMatrixError,
    VariableMismatchError,
)
from .laurent import Coefficient, LaurentPoly, exact_divide, try_divide

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class RationalFunction:
    """Element of the fraction field; equality by cross-multiplication."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        if den is None:
            den = LaurentPoly.one(num.variables)
        if num.variables != den.variables:
            raise VariableMismatchError(
                f"Numerator over {num.variables}, denominator over {den.variables}")
        if den.is_zero():
            raise DomainError("Rational function with zero denominator")
        self.num, self.den = self._canonical(num, den)

    @staticmethod
    def _canonical(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return num, LaurentPoly.one(num.variables)
        low = den.min_exponents()
        shift = tuple(-e for e in low)
        num, den = num.shift(shift), den.shift(shift)
        cn, cd = num.content(), den.content()
        g = Fraction(_fraction_gcd(cn, cd))
        num, den = num.scale(1 / g), den.scale(1 / g)
        if den.leading_term()[1] < 0:
            num, den = -num, -den
        if len(den) > 1:
            quotient = try_divide(num, den)
            if quotient is not None:
                return quotient, LaurentPoly.one(num.variables)
        return num, den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p)

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> "RationalFunction":
        return cls(LaurentPoly.constant(variables, value))

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "RationalFunction":
        return cls(LaurentPoly.zero(variables))

    @classmethod
    def one(cls, variables: Sequence[str]) -> "RationalFunction":
        return cls(LaurentPoly.one(variables))

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.num.variables

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            if other.variables != self.variables:
                raise VariableMismatchError(
                    f"Variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction.constant(self.variables, other)
        return None

    def __add__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DomainError("Cannot invert the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return rf_eq(self, other)

    def involute(self) -> "RationalFunction":
        return RationalFunction(self.num.involute(), self.den.involute())

    def to_laurent(self) -> Optional[LaurentPoly]:
        """The Laurent polynomial equal to self, or None if self is not one."""
        return try_divide(self.num, self.den)

    def is_laurent(self) -> bool:
        return self.to_laurent() is not None

    def evaluate(self, point: Mapping[str, Scalar]) -> Coefficient:
        den = self.den.evaluate(point)
        if den == 0:
            raise DomainError(f"Denominator {self.den} vanishes at {dict(point)}")
        value = Fraction(self.num.evaluate(point)) / Fraction(den)
        return int(value) if value.denominator == 1 else value

    def specialize(self, var: str, value: Union[Scalar, LaurentPoly] = 1) -> "RationalFunction":
        den = self.den.specialize(var, value)
        if den.is_zero():
            raise DomainError(f"Denominator {self.den} vanishes under {var} -> {value}")
        return RationalFunction(self.num.specialize(var, value), den)

    def with_variables(self, variables: Sequence[str]) -> "RationalFunction":
        return RationalFunction(self.num.with_variables(variables), self.den.with_variables(variables))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        num = str(self.num) if len(self.num) == 1 else f"({self.num})"
        den = str(self.den) if len(self.den) == 1 else f"({self.den})"
        return f"{num} / {den}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "RationalFunction":
        """Inverse of str(): ``p``, ``p / q`` or ``(p) / (q)``."""
        num_text, _, den_text = text.partition(" / ")
        num = LaurentPoly.parse(_strip_parens(num_text), variables)
        if not den_text:
            return cls(num)
        return cls(num, LaurentPoly.parse(_strip_parens(den_text), variables))

    def to_dict(self) -> Dict[str, object]:
        return {"variables": list(self.variables), "num": str(self.num), "den": str(self.den)}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "RationalFunction":
        variables = list(data["variables"])
        return cls(LaurentPoly.parse(str(data["num"]), variables),
                   LaurentPoly.parse(str(data["den"]), variables))


def _strip_parens(text: str) -> str:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return text[1:-1]
    return text


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    """gcd in Q of two positive rationals: gcd(numerators) / lcm(denominators)."""
    return Fraction(math.gcd(a.numerator, b.numerator), math.lcm(a.denominator, b.denominator))


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_inv(a: RationalFunction) -> RationalFunction:
    return a.inverse()


def rf_eq(a: RationalFunction, b: RationalFunction) -> bool:
    if a.variables != b.variables:
        raise VariableMismatchError(f"Variable mismatch: {a.variables} vs {b.variables}")
    return a.num * b.den == b.num * a.den


class FieldMatrix:
    """Rectangular matrix of rational functions over a fixed variable list."""

    def __init__(self, entries: Sequence[Sequence[Union[RationalFunction, LaurentPoly, Scalar]]],
                 variables: Sequence[str], cols: Optional[int] = None):
        self.variables = tuple(variables)
        rows = []
        for row in entries:
            rows.append([self._coerce(value) for value in row])
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise DomainError(f"Ragged matrix with row lengths {sorted(widths)}")
        self.rows = len(rows)
        self.cols = widths.pop() if widths else (cols or 0)
        self.entries = rows

    def _coerce(self, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            if value.variables != self.variables:
                raise VariableMismatchError(
                    f"Entry over {value.variables}, matrix over {self.variables}")
            return value
        if isinstance(value, LaurentPoly):
            if value.variables != self.variables:
                raise VariableMismatchError(
                    f"Entry over {value.variables}, matrix over {self.variables}")
            return RationalFunction(value)
        return RationalFunction.constant(self.variables, value)

    @classmethod
    def identity(cls, n: int, variables: Sequence[str]) -> "FieldMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], variables, n)

    @classmethod
    def zeros(cls, rows: int, cols: int, variables: Sequence[str]) -> "FieldMatrix":
        return cls([[0] * cols for _ in range(rows)], variables, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> RationalFunction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> List[RationalFunction]:
        return list(self.entries[i])

    def column(self, j: int) -> List[RationalFunction]:
        return [row[j] for row in self.entries]

    def map(self, fn: Callable[[RationalFunction], RationalFunction]) -> "FieldMatrix":
        return FieldMatrix([[fn(x) for x in row] for row in self.entries], self.variables, self.cols)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix([self.column(j) for j in range(self.cols)], self.variables, self.rows)

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_shape(other)
        return FieldMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)], self.variables, self.cols)

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_shape(other)
        return FieldMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)], self.variables, self.cols)

    def __neg__(self) -> "FieldMatrix":
        return self.map(lambda x: -x)

    def scale(self, factor: Union[RationalFunction, LaurentPoly, Scalar]) -> "FieldMatrix":
        factor = self._coerce(factor)
        return self.map(lambda x: x * factor)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise DomainError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.variables != other.variables:
            raise VariableMismatchError(f"Variable mismatch: {self.variables} vs {other.variables}")
        zero = RationalFunction.zero(self.variables)
        result = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                total = zero
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        total = total + a * b
                row.append(total)
            result.append(row)
        return FieldMatrix(result, self.variables, other.cols)

    __mul__ = __matmul__

    def _check_shape(self, other: "FieldMatrix") -> None:
        if self.shape != other.shape:
            raise DomainError(f"Shape mismatch: {self.shape} vs {other.shape}")
        if self.variables != other.variables:
            raise VariableMismatchError(f"Variable mismatch: {self.variables} vs {other.variables}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.variables == other.variables and
                all(rf_eq(a, b) for r1, r2 in zip(self.entries, other.entries)
                    for a, b in zip(r1, r2)))

    __hash__ = None

    def vstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.cols:
            raise DomainError(f"Cannot stack {self.shape} over {other.shape}")
        return FieldMatrix(self.entries + other.entries, self.variables, self.cols)

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.rows != other.rows:
            raise DomainError(f"Cannot place {self.shape} beside {other.shape}")
        return FieldMatrix([r1 + r2 for r1, r2 in zip(self.entries, other.entries)],
                           self.variables, self.cols + other.cols)

    def delete_row(self, i: int) -> "FieldMatrix":
        return FieldMatrix(self.entries[:i] + self.entries[i + 1:], self.variables, self.cols)

    def laurent_entries(self) -> Optional[List[List[LaurentPoly]]]:
        """Entries as Laurent polynomials, or None if some entry is not one."""
        result = []
        for row in self.entries:
            converted = []
            for x in row:
                p = x.to_laurent()
                if p is None:
                    return None
                converted.append(p)
            result.append(converted)
        return result

    def non_laurent_positions(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.entries)
                for j, x in enumerate(row) if not x.is_laurent()]

    def to_strings(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in self.to_strings())

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols} over {list(self.variables)})"


def bareiss_det(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """
    Fraction-free determinant of a square matrix of Laurent polynomials.

    Every division is exact by Bareiss' identity; a failed one means an
    arithmetic bug and raises ExactDivisionError.
    """
    n = len(rows)
    if n == 0:
        raise DomainError("bareiss_det needs at least one row; use det() for empty matrices")
    variables = rows[0][0].variables if rows[0] else ()
    if any(len(row) != n for row in rows):
        raise DomainError("bareiss_det requires a square matrix")
    m = [list(row) for row in rows]
    sign = 1
    previous = LaurentPoly.one(variables)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(variables)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = value if k == 0 else exact_divide(value, previous)
        previous = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def _clear_row(row: Sequence[RationalFunction]) -> Tuple[List[LaurentPoly], LaurentPoly]:
    """Multiply a row by the product of its distinct denominators."""
    variables = row[0].variables
    distinct: List[LaurentPoly] = []
    for x in row:
        if x.den != 1 and x.den not in distinct:
            distinct.append(x.den)
    factor = LaurentPoly.one(variables)
    for d in distinct:
        factor = factor * d
    cleared = []
    for x in row:
        if x.is_zero():
            cleared.append(LaurentPoly.zero(variables))
            continue
        other = LaurentPoly.one(variables)
        for d in distinct:
            if d != x.den:
                other = other * d
        cleared.append(x.num * other)
    return cleared, factor


def cleared_rows(m: FieldMatrix) -> Tuple[List[List[LaurentPoly]], List[LaurentPoly]]:
    rows, factors = [], []
    for row in m.entries:
        cleared, factor = _clear_row(row)
        rows.append(cleared)
        factors.append(factor)
    return rows, factors


def det(m: FieldMatrix) -> RationalFunction:
    """Exact determinant; 1 for the empty matrix, 0 for singular ones."""
    if m.rows != m.cols:
        raise DomainError(f"Determinant of non-square matrix {m.shape}")
    if m.rows == 0:
        return RationalFunction.one(m.variables)
    rows, factors = cleared_rows(m)
    denominator = LaurentPoly.one(m.variables)
    for f in factors:
        denominator = denominator * f
    try:
        value = bareiss_det(rows)
    except ExactDivisionError as e:
        logger.error(f"Error in determinant of {m!r}: {e}")
        raise
    logger.debug(f"Determinant of {m.rows}x{m.cols} matrix computed")
    return RationalFunction(value, denominator)


def solve_right(m: FieldMatrix, rhs: FieldMatrix) -> FieldMatrix:
    """
    Solve m * X = rhs exactly by Cramer's rule on the cleared matrix.

    Raises:
        SingularMatrixError: det(m) = 0
    """
    if m.rows != m.cols:
        raise DomainError(f"solve_right needs a square matrix, got {m.shape}")
    if rhs.rows != m.rows:
        raise DomainError(f"Right-hand side has {rhs.rows} rows, expected {m.rows}")
    n = m.rows
    if n == 0:
        return FieldMatrix.zeros(0, rhs.cols, m.variables)
    rows, factors = cleared_rows(m)
    d = bareiss_det(rows)
    if d.is_zero():
        raise SingularMatrixError(f"Matrix {m!r} is singular")
    # m X = rhs  <=>  diag(factors) m X = diag(factors) rhs
    scaled = [[x * f for x in rhs.row(i)] for i, f in enumerate(factors)]
    columns = []
    for c in range(rhs.cols):
        column = [scaled[i][c] for i in range(n)]
        cleared, common = _clear_column(column, m.variables)
        solution = []
        for i in range(n):
            replaced = [list(r) for r in rows]
            for k in range(n):
                replaced[k][i] = cleared[k]
            solution.append(RationalFunction(bareiss_det(replaced), d * common))
        columns.append(solution)
    return FieldMatrix([[columns[c][i] for c in range(rhs.cols)] for i in range(n)],
                       m.variables, rhs.cols)


def _clear_column(column: Sequence[RationalFunction],
                  variables: Sequence[str]) -> Tuple[List[LaurentPoly], LaurentPoly]:
    if all(x.is_zero() for x in column):
        return [LaurentPoly.zero(variables) for _ in column], LaurentPoly.one(variables)
    return _clear_row(column)


def inverse(m: FieldMatrix) -> FieldMatrix:
    return solve_right(m, FieldMatrix.identity(m.rows, m.variables))


def specialize_matrix(m: FieldMatrix, assignment: Mapping[str, Scalar]) -> sympy.Matrix:
    """Evaluate every entry at the given point; returns an exact rational sympy Matrix."""
    values = []
    for row in m.entries:
        values.append([_to_sympy(x.evaluate(assignment)) for x in row])
    return sympy.Matrix(m.rows, m.cols, [v for row in values for v in row])


def augmentation(m: FieldMatrix) -> sympy.Matrix:
    """All variables sent to 1."""
    return specialize_matrix(m, {v: 1 for v in m.variables})


def _to_sympy(value: Scalar) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


class TorsionClass:
    """Nonzero field element up to multiplication by ±monomials."""

    __hash__ = None

    def __init__(self, value: RationalFunction):
        if value.is_zero():
            raise DomainError("Torsion class of zero is undefined")
        self.value = value

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.value.variables

    def is_trivial(self) -> bool:
        """True iff the class is that of 1; num and den may share a non-unit factor."""
        return eq_up_to_unit(self, TorsionClass(RationalFunction.one(self.variables)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorsionClass):
            return NotImplemented
        return eq_up_to_unit(self, other)

    def __mul__(self, other: "TorsionClass") -> "TorsionClass":
        return TorsionClass(self.value * other.value)

    def __str__(self) -> str:
        return f"{self.value} (up to ±monomial)"

    def __repr__(self) -> str:
        return f"TorsionClass({str(self.value)!r})"

    def to_dict(self) -> Dict[str, object]:
        data = self.value.to_dict()
        data["up_to"] = "±monomial"
        data["trivial"] = self.is_trivial()
        return data


def eq_up_to_unit(a: TorsionClass, b: TorsionClass) -> bool:
    """True iff a.value / b.value is ±(monomial)."""
    if a.variables != b.variables:
        raise VariableMismatchError(f"Variable mismatch: {a.variables} vs {b.variables}")
    p = (a.value.num * b.value.den).terms()
    q = (b.value.num * a.value.den).terms()
    if len(p) != len(q) or not p:
        return False
    (e0, c0), (f0, d0) = p[0], q[0]
    offset = tuple(x - y for x, y in zip(e0, f0))
    ratio = Fraction(c0) / Fraction(d0)
    if ratio not in (1, -1):
        return False
    for (e, c), (f, d) in zip(p, q):
        if tuple(x - y for x, y in zip(e, f)) != offset or Fraction(c) != ratio * d:
            return False
    return True


def minors(rows: Sequence[Sequence[LaurentPoly]], k: int,
           variables: Sequence[str]) -> List[LaurentPoly]:
    """All k x k minors, row combinations outermost, in lexicographic order."""
    if k == 0:
        return [LaurentPoly.one(variables)]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    result = []
    for row_idx in itertools.combinations(range(n_rows), k):
        for col_idx in itertools.combinations(range(n_cols), k):
            result.append(bareiss_det([[rows[i][j] for j in col_idx] for i in row_idx]))
    return result
