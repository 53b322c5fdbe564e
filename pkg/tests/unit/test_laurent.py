"""
Unit tests for Laurent polynomial arithmetic.
"""

import os
import sys
import unittest
from fractions import Fraction

# Add the project root to the path so we can import modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from src.algebra.laurent import (
    LaurentPoly,
    exact_divide,
    normalize_alexander,
    try_divide,
)
from src.exceptions import (
    DegenerateAlexanderError,
    DomainError,
    ExactDivisionError,
    VariableMismatchError,
)

T = ('t',)
T2 = ('t1', 't2')


class LaurentPolyTests(unittest.TestCase):
    """Test LaurentPoly construction, arithmetic and ring maps."""

    def setUp(self):
        self.t = LaurentPoly.variable(T, 't')
        self.t1 = LaurentPoly.variable(T2, 't1')
        self.t2 = LaurentPoly.variable(T2, 't2')

    def test_01_zero_terms_dropped(self):
        """Terms with zero coefficient vanish."""
        p = self.t - self.t
        self.assertTrue(p.is_zero())
        self.assertEqual(str(p), "0")
        self.assertEqual(len(self.t + 1 - 1), 1)

    def test_02_canonical_rendering(self):
        """Terms print in descending lexicographic order."""
        p = self.t * self.t - self.t + 1
        self.assertEqual(str(p), "t^2 - t + 1")
        q = self.t1 - self.t1 * self.t2 ** -1 - self.t2 ** -2
        self.assertEqual(str(q), "t1 - t1*t2^-1 - t2^-2")

    def test_03_parse_round_trip(self):
        """Parsing the rendering gives the same polynomial."""
        p = LaurentPoly.parse("-t1^-1*t2^-6 - t1 + t2^-4 + t2^-3 + t2^-2", T2)
        self.assertEqual(LaurentPoly.parse(str(p), T2), p)
        self.assertEqual(p.coefficient((-1, -6)), -1)
        self.assertEqual(p.coefficient((0, -4)), 1)
        self.assertEqual(LaurentPoly.parse("1/4*t^2", T).coefficient((2,)), Fraction(1, 4))

    def test_04_parse_unknown_variable(self):
        """Unknown variable names are rejected."""
        with self.assertRaises(VariableMismatchError):
            LaurentPoly.parse("t + s", T)

    def test_05_multiplication_and_powers(self):
        """Products, positive powers and monomial inverses."""
        p = (self.t + 1) ** 2
        self.assertEqual(p, self.t * self.t + self.t * 2 + 1)
        self.assertEqual(self.t ** -2 * self.t ** 2, 1)
        with self.assertRaises(DomainError):
            (self.t + 1) ** -1

    def test_06_variable_mismatch(self):
        """Mixing variable lists raises."""
        with self.assertRaises(VariableMismatchError):
            self.t + self.t1

    def test_07_involution(self):
        """Involution negates every exponent vector."""
        p = LaurentPoly.parse("t1 - t1*t2^-1 - t2^-2", T2)
        self.assertEqual(p.involute(), LaurentPoly.parse("t1^-1 - t1^-1*t2 - t2^2", T2))
        self.assertEqual(p.involute().involute(), p)

    def test_08_evaluate(self):
        """Exact evaluation, zero is outside the domain."""
        p = LaurentPoly.parse("t^2 - t + 1", T)
        self.assertEqual(p.evaluate({'t': 2}), 3)
        self.assertEqual(LaurentPoly.parse("t^-1", T).evaluate({'t': 2}), Fraction(1, 2))
        with self.assertRaises(DomainError):
            p.evaluate({'t': 0})

    def test_09_specialize(self):
        """Specializing a variable to 1 or to a monomial."""
        p = LaurentPoly.parse("t1*t2 + t2^-1", T2)
        self.assertEqual(p.specialize('t1'), LaurentPoly.parse("t2 + t2^-1", ('t2',)))
        s = LaurentPoly.variable(('t2',), 't2')
        self.assertEqual(p.specialize('t1', s), LaurentPoly.parse("t2^2 + t2^-1", ('t2',)))

    def test_10_monomial_units(self):
        """Only ±monomials are units."""
        self.assertTrue((-self.t1 * self.t2 ** -3).is_monomial_unit())
        self.assertFalse((self.t1 * 2).is_monomial_unit())
        self.assertFalse((self.t1 + 1).is_monomial_unit())

    def test_11_exact_division(self):
        """Exact division in the Laurent ring."""
        a = self.t * self.t - self.t + 1
        b = self.t + 1
        self.assertEqual(exact_divide(a * b, b), a)
        shifted = (a * b).shift((-5,))
        self.assertEqual(exact_divide(shifted, a), b.shift((-5,)))
        self.assertIsNone(try_divide(a, b))
        with self.assertRaises(ExactDivisionError):
            exact_divide(a, b)

    def test_12_multivariate_division(self):
        """Division of bivariate polynomials with negative exponents."""
        a = LaurentPoly.parse("1 - t1*t2^2 - t1*t2^3 - t1*t2^4 + t1^2*t2^6", T2)
        b = LaurentPoly.parse("t1^-1 + t2^-3", T2)
        self.assertEqual(exact_divide(a * b, a), b)

    def test_13_normalize_alexander(self):
        """Normalization shifts to t^0 and makes the constant term positive."""
        p = LaurentPoly.parse("-t^3 + t^2 - t", T)
        result = normalize_alexander(p)
        self.assertEqual(str(result.poly), "t^2 - t + 1")
        self.assertEqual(result.degree, 2)
        self.assertEqual(str(result), "t^2 - t + 1 (degree 2)")

    def test_14_normalize_degenerate(self):
        """Zero and multivariable inputs are rejected."""
        with self.assertRaises(DegenerateAlexanderError):
            normalize_alexander(LaurentPoly.zero(T))
        with self.assertRaises(VariableMismatchError):
            normalize_alexander(self.t1)

    def test_15_content(self):
        """Content is the positive rational gcd of the coefficients."""
        p = LaurentPoly.parse("4*t^2 - 6", T)
        self.assertEqual(p.content(), 2)
        self.assertEqual(LaurentPoly.parse("1/2*t + 1/3", T).content(), Fraction(1, 6))


if __name__ == '__main__':
    unittest.main()
