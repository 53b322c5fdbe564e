"""
Exact multivariate Laurent polynomials.

Elements of Z[t1^±, ..., tk^±] (or Q[...] when a formula carries a rational
prefactor) stored as a map from exponent vectors to nonzero coefficients.
Terms are kept in descending lexicographic order of exponent vectors, which
is also the order used for rendering.

Author: Robert Torres
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy.polys.polyerrors import ExactQuotientFailed

from ..exceptions import (
    DegenerateAlexanderError,
    DomainError,
    ExactDivisionError,
    InputSyntaxError,
    VariableMismatchError,
)

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]
Exponents = Tuple[int, ...]

_VARIABLE_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


def _demote(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _coerce_scalar(value) -> Coefficient:
    if isinstance(value, bool):
        raise DomainError(f"Invalid coefficient: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _demote(value)
    if isinstance(value, sympy.Rational):
        return _demote(Fraction(int(value.p), int(value.q)))
    raise DomainError(f"Invalid coefficient: {value!r}. Must be int or Fraction")


class LaurentPoly:
    """Immutable Laurent polynomial over an ordered list of variables."""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str],
                 terms: Optional[Mapping[Sequence[int], Coefficient]] = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise DomainError(f"Duplicate variable names: {variables}")
        for name in variables:
            if not _VARIABLE_RE.match(name):
                raise DomainError(f"Invalid variable name: {name!r}")
        cleaned: Dict[Exponents, Coefficient] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise DomainError(
                    f"Exponent vector {exps} has length {len(exps)}, expected {len(variables)}")
            coeff = _coerce_scalar(coeff)
            total = _demote(cleaned.get(exps, 0) + coeff)
            if total == 0:
                cleaned.pop(exps, None)
            else:
                cleaned[exps] = total
        self._variables = variables
        self._terms = cleaned
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: Coefficient) -> "LaurentPoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Sequence[int],
                 coefficient: Coefficient = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "LaurentPoly":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"Unknown variable {name!r}; have {variables}")
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls.monomial(variables, exps)

    # Accessors

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def ring(self) -> str:
        """'ZZ' when every coefficient is an integer, else 'QQ'."""
        return 'ZZ' if self.is_integral() else 'QQ'

    def terms(self) -> List[Tuple[Exponents, Coefficient]]:
        """Terms in canonical (descending lexicographic) order."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def as_dict(self) -> Dict[Exponents, Coefficient]:
        return dict(self._terms)

    def coefficient(self, exponents: Sequence[int]) -> Coefficient:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_monomial_unit(self) -> bool:
        """True iff the polynomial is ±(monomial)."""
        if len(self._terms) != 1:
            return False
        (coeff,) = self._terms.values()
        return coeff in (1, -1)

    def min_exponents(self) -> Exponents:
        if not self._terms:
            return (0,) * len(self._variables)
        return tuple(min(col) for col in zip(*self._terms)) if self._variables else ()

    def max_exponents(self) -> Exponents:
        if not self._terms:
            return (0,) * len(self._variables)
        return tuple(max(col) for col in zip(*self._terms)) if self._variables else ()

    def leading_term(self) -> Tuple[Exponents, Coefficient]:
        if not self._terms:
            raise DomainError("Zero polynomial has no leading term")
        return self.terms()[0]

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive; 0 for zero."""
        if not self._terms:
            return Fraction(0)
        coeffs = [Fraction(c) for c in self._terms.values()]
        denominator = math.lcm(*(c.denominator for c in coeffs))
        numerator = math.gcd(*(int(c * denominator) for c in coeffs))
        return Fraction(numerator, denominator)

    # Arithmetic

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self._variables != other._variables:
            raise VariableMismatchError(
                f"Variable mismatch: {self._variables} vs {other._variables}")

    def _lift(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.constant(self._variables, other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(self._variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: Dict[Exponents, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return LaurentPoly(self._variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self._terms) != 1:
                raise DomainError("Negative powers exist only for monomials")
            ((exps, coeff),) = self._terms.items()
            inverse = LaurentPoly(self._variables,
                                  {tuple(-e for e in exps): Fraction(1) / Fraction(coeff)})
            return inverse ** (-exponent)
        result = LaurentPoly.one(self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponents: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPoly(self._variables, {
            tuple(a + b for a, b in zip(e, exponents)): c for e, c in self._terms.items()})

    def scale(self, factor: Coefficient) -> "LaurentPoly":
        return LaurentPoly(self._variables, {e: c * factor for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == LaurentPoly.constant(self._variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    # Ring homomorphisms

    def involute(self) -> "LaurentPoly":
        """Apply t -> t^-1 to every variable."""
        return LaurentPoly(self._variables, {
            tuple(-a for a in e): c for e, c in self._terms.items()})

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Coefficient:
        """
        Substitute exact nonzero rationals for every variable.

        Raises:
            DomainError: a variable is missing or assigned zero
        """
        values = []
        for name in self._variables:
            if name not in point:
                raise DomainError(f"No value given for variable {name!r}")
            value = Fraction(point[name])
            if value == 0:
                raise DomainError(f"Cannot substitute 0 for Laurent variable {name!r}")
            values.append(value)
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = Fraction(coeff)
            for value, e in zip(values, exps):
                term *= value ** e
            total += term
        return _demote(total)

    def constant_term(self) -> Coefficient:
        return self._terms.get((0,) * len(self._variables), 0)

    def specialize(self, var: str, value: Union[int, Fraction, "LaurentPoly"] = 1) -> "LaurentPoly":
        """
        Substitute a nonzero scalar or a monomial in the remaining variables for var.

        The result lives over the variable list with var removed.
        """
        if var not in self._variables:
            raise VariableMismatchError(f"Unknown variable {var!r}; have {self._variables}")
        index = self._variables.index(var)
        remaining = self._variables[:index] + self._variables[index + 1:]
        if isinstance(value, LaurentPoly):
            if value.variables != remaining:
                raise VariableMismatchError(
                    f"Substituted value must live over {remaining}, got {value.variables}")
            substitute = value
        else:
            if Fraction(value) == 0:
                raise DomainError(f"Cannot substitute 0 for Laurent variable {var!r}")
            substitute = LaurentPoly.constant(remaining, _coerce_scalar(value))
        result = LaurentPoly.zero(remaining)
        for exps, coeff in self._terms.items():
            rest = exps[:index] + exps[index + 1:]
            result = result + LaurentPoly.monomial(remaining, rest, coeff) * substitute ** exps[index]
        return result

    def with_variables(self, variables: Sequence[str]) -> "LaurentPoly":
        """Re-embed into a larger variable list (new variables get exponent 0)."""
        variables = tuple(variables)
        missing = [v for v in self._variables if v not in variables]
        if missing:
            raise VariableMismatchError(f"Cannot drop variables {missing}")
        positions = [self._variables.index(v) if v in self._variables else None
                     for v in variables]
        return LaurentPoly(variables, {
            tuple(e[p] if p is not None else 0 for p in positions): c
            for e, c in self._terms.items()})

    # Rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for position, (exps, coeff) in enumerate(self.terms()):
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            factors = [name if e == 1 else f"{name}^{e}"
                       for name, e in zip(self._variables, exps) if e != 0]
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({list(self._variables)!r}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "LaurentPoly":
        """
        Parse the canonical rendering (and looser hand-written variants).

        Accepts terms like ``-3*t1^-2*t2``, ``1/4*t^2``, ``t1 t2`` (juxtaposition
        multiplies) and a bare ``0``.
        """
        variables = tuple(variables)
        source = text.strip()
        if not source:
            raise InputSyntaxError(f"Empty polynomial for variables {variables}")
        protected = re.sub(r'\^\s*-', '^~', source)
        pieces = re.split(r'([+-])', protected)
        result = cls.zero(variables)
        sign = 1
        seen_term = False
        for piece in pieces:
            piece = piece.strip()
            if piece in ('+', '-'):
                sign = sign * (-1 if piece == '-' else 1)
                continue
            if not piece:
                continue
            result = result + cls._parse_term(piece.replace('^~', '^-'), variables, text).scale(sign)
            sign = 1
            seen_term = True
        if not seen_term:
            raise InputSyntaxError(f"No terms found in {text!r}")
        return result

    @classmethod
    def _parse_term(cls, term: str, variables: Tuple[str, ...], source: str) -> "LaurentPoly":
        coeff: Fraction = Fraction(1)
        exps = [0] * len(variables)
        for factor in re.split(r'[*\s]+', term):
            if not factor:
                continue
            if re.fullmatch(r'\d+(/\d+)?', factor):
                coeff *= Fraction(factor)
                continue
            match = re.fullmatch(r'([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?', factor)
            if not match:
                raise InputSyntaxError(f"Cannot parse factor {factor!r} in {source!r}")
            name, power = match.group(1), int(match.group(2) or 1)
            if name not in variables:
                raise VariableMismatchError(
                    f"Unknown variable {name!r} in {source!r}; declared {variables}")
            exps[variables.index(name)] += power
        return cls.monomial(variables, exps, _demote(coeff))

    # sympy bridge

    def _symbols(self) -> Tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(name) for name in self._variables)

    def to_sympy_poly(self) -> Tuple[sympy.Poly, Exponents]:
        """Shift into a genuine polynomial; returns (Poly over QQ, shift vector)."""
        low = self.min_exponents()
        data = {tuple(a - b for a, b in zip(e, low)):
                sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                for e, c in self._terms.items()}
        return sympy.Poly.from_dict(data, *self._symbols(), domain='QQ'), low

    @classmethod
    def from_sympy_poly(cls, poly: sympy.Poly, variables: Sequence[str],
                        shift: Optional[Sequence[int]] = None) -> "LaurentPoly":
        shift = tuple(shift or (0,) * len(tuple(variables)))
        return cls(variables, {
            tuple(a + b for a, b in zip(monom, shift)): _coerce_scalar(sympy.Rational(coeff))
            for monom, coeff in poly.as_dict().items()})


def try_divide(p: LaurentPoly, q: LaurentPoly) -> Optional[LaurentPoly]:
    """Exact quotient p / q in the Laurent ring, or None when q does not divide p."""
    p._check_compatible(q)
    if q.is_zero():
        raise DomainError("Division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.variables)
    if len(q) == 1:
        ((exps, coeff),) = q.as_dict().items()
        return p.shift(tuple(-e for e in exps)).scale(Fraction(1) / Fraction(coeff))
    if not p.variables:
        return LaurentPoly.constant((), Fraction(p.constant_term()) / Fraction(q.constant_term()))
    p_poly, p_low = p.to_sympy_poly()
    q_poly, q_low = q.to_sympy_poly()
    try:
        quotient = p_poly.exquo(q_poly)
    except ExactQuotientFailed:
        return None
    return LaurentPoly.from_sympy_poly(
        quotient, p.variables, tuple(a - b for a, b in zip(p_low, q_low)))


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """
    Exact quotient p / q in the Laurent ring.

    Raises:
        ExactDivisionError: q does not divide p
    """
    quotient = try_divide(p, q)
    if quotient is None:
        logger.error(f"Exact division failed: ({p}) / ({q})")
        raise ExactDivisionError(f"({q}) does not divide ({p})")
    return quotient


def is_monomial_unit(p: LaurentPoly) -> bool:
    return p.is_monomial_unit()


def involute(p: LaurentPoly) -> LaurentPoly:
    return p.involute()


def evaluate(p: LaurentPoly, point: Mapping[str, Union[int, Fraction]]) -> Coefficient:
    return p.evaluate(point)


def constant_term(p: LaurentPoly) -> Coefficient:
    return p.constant_term()


def specialize(p: LaurentPoly, var: str,
               value: Union[int, Fraction, LaurentPoly] = 1) -> LaurentPoly:
    return p.specialize(var, value)


@dataclass(frozen=True)
class NormalizedAlexander:
    """One-variable polynomial with lowest degree 0 and positive constant term."""

    poly: LaurentPoly
    degree: int

    def __str__(self) -> str:
        return f"{self.poly} (degree {self.degree})"

    def to_dict(self) -> Dict[str, object]:
        return {"variables": list(self.poly.variables), "poly": str(self.poly),
                "degree": self.degree}


def normalize_alexander(p: LaurentPoly) -> NormalizedAlexander:
    """
    Normalize a one-variable polynomial up to ±t^k.

    Raises:
        DegenerateAlexanderError: p is zero
        VariableMismatchError: p is not a polynomial in exactly one variable
    """
    if len(p.variables) != 1:
        raise VariableMismatchError(
            f"Alexander polynomials use exactly one variable, got {p.variables}")
    if p.is_zero():
        raise DegenerateAlexanderError("Alexander polynomial is zero (degenerate link)")
    (low,) = p.min_exponents()
    shifted = p.shift((-low,))
    if shifted.constant_term() < 0:
        shifted = -shifted
    (high,) = shifted.max_exponents()
    return NormalizedAlexander(poly=shifted, degree=high)
