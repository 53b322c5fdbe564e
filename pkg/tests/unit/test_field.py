"""
Unit tests for rational functions, field matrices and torsion classes.
"""

import os
import sys
import unittest

import numpy as np
import sympy

# Add the project root to the path so we can import modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from src.algebra.field import (
    FieldMatrix,
    RationalFunction,
    TorsionClass,
    augmentation,
    bareiss_det,
    det,
    inverse,
    minors,
    solve_right,
)
from src.algebra.laurent import LaurentPoly
from src.exceptions import DomainError, SingularMatrixError

T = ('t',)
T2 = ('t1', 't2')


def poly(text, variables=T2):
    return LaurentPoly.parse(text, variables)


def random_poly_matrix(rng, n, variables=T2, terms=3, spread=2):
    """n x n matrix of random small Laurent polynomials."""
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            data = {}
            for _ in range(terms):
                exps = tuple(int(e) for e in rng.integers(-spread, spread + 1, size=len(variables)))
                data[exps] = data.get(exps, 0) + int(rng.integers(-3, 4))
            row.append(LaurentPoly(variables, data))
        rows.append(row)
    return rows


class RationalFunctionTests(unittest.TestCase):
    """Test canonical forms and field arithmetic."""

    def test_01_equality_by_cross_multiplication(self):
        """(t^2 - 1)/(t - 1) equals t + 1 without a gcd."""
        a = RationalFunction(poly("t^2 - 1", T), poly("t - 1", T))
        self.assertEqual(a, RationalFunction(poly("t + 1", T)))
        self.assertEqual(a.to_laurent(), poly("t + 1", T))

    def test_02_canonical_denominator(self):
        """Denominators are shifted to exponent 0 and made positive-leading."""
        a = RationalFunction(poly("2*t", T), poly("-4*t^-1 + 2*t^-2", T))
        self.assertEqual(a.den.min_exponents(), (0,))
        self.assertGreater(a.den.leading_term()[1], 0)
        self.assertEqual(a.den.content(), 1)

    def test_03_field_operations(self):
        x = RationalFunction(poly("t1 + 1"), poly("t2 - 1"))
        y = RationalFunction(poly("t2"), poly("t1 + 1"))
        self.assertEqual(x * y, RationalFunction(poly("t2"), poly("t2 - 1")))
        self.assertEqual(x * x.inverse(), 1)
        self.assertEqual(x - x, 0)
        self.assertEqual((x + y) - y, x)
        self.assertEqual(x / x, RationalFunction.one(T2))

    def test_04_non_laurent(self):
        a = RationalFunction(poly("1", T), poly("1 - t", T))
        self.assertIsNone(a.to_laurent())
        self.assertFalse(a.is_laurent())

    def test_05_zero_denominator(self):
        with self.assertRaises(DomainError):
            RationalFunction(poly("t", T), LaurentPoly.zero(T))
        with self.assertRaises(DomainError):
            RationalFunction.zero(T).inverse()

    def test_06_dict_round_trip(self):
        a = RationalFunction(poly("t1 - t2"), poly("1 + t1*t2"))
        self.assertEqual(RationalFunction.from_dict(a.to_dict()), a)

    def test_07_exact_quotient_cancels(self):
        """A denominator dividing the numerator leaves a Laurent polynomial."""
        a = RationalFunction(poly("1 - t1"), poly("t1 - 1"))
        self.assertEqual(str(a), "-1")
        self.assertEqual(a.den, LaurentPoly.one(T2))
        b = RationalFunction(poly("t1 - t1^2"), poly("t1 - 1"))
        self.assertEqual(str(b), "-t1")
        c = RationalFunction(poly("t1^2 - 1"), poly("t1 - 1"))
        self.assertEqual(str(c), "t1 + 1")

    def test_08_parse_rendering(self):
        values = [
            RationalFunction(poly("t1 - t2"), poly("1 + t1*t2")),
            RationalFunction(poly("1"), poly("2*t1")),
            RationalFunction(poly("t2^2"), poly("1 - t1*t2^2 - t1*t2^3")),
            RationalFunction(poly("-3*t1^-2*t2")),
        ]
        for value in values:
            self.assertEqual(RationalFunction.parse(str(value), T2), value)


class DeterminantTests(unittest.TestCase):
    """Test exact determinants and linear solves."""

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_01_small_determinants(self):
        m = FieldMatrix([[poly("t1"), poly("1")], [poly("1"), poly("t2")]], T2)
        self.assertEqual(det(m), RationalFunction(poly("t1*t2 - 1")))
        self.assertEqual(det(FieldMatrix([], T2, 0)), 1)
        self.assertEqual(det(FieldMatrix.identity(3, T2)), 1)

    def test_02_matches_sympy(self):
        """Bareiss agrees with sympy on random Laurent matrices."""
        t1, t2 = sympy.symbols('t1 t2')
        for n in (1, 2, 3):
            rows = random_poly_matrix(self.rng, n)
            expected = sympy.Matrix(n, n, lambda i, j: sum(
                c * t1 ** e[0] * t2 ** e[1] for e, c in rows[i][j].as_dict().items())).det()
            actual = sum(c * t1 ** e[0] * t2 ** e[1] for e, c in bareiss_det(rows).as_dict().items())
            self.assertEqual(sympy.simplify(sympy.expand(expected - actual)), 0)

    def test_03_multiplicative(self):
        """det(AB) = det(A) det(B) on random matrices."""
        for trial in range(100):
            n = 3 if trial % 10 == 0 else 2
            a = FieldMatrix(random_poly_matrix(self.rng, n), T2)
            b = FieldMatrix(random_poly_matrix(self.rng, n), T2)
            self.assertEqual(det(a @ b), det(a) * det(b))

    def test_04_rational_entries(self):
        """Row clearing handles rational entries."""
        half = RationalFunction(poly("1"), poly("1 - t1"))
        m = FieldMatrix([[half, 0], [0, RationalFunction(poly("1 - t1"))]], T2)
        self.assertEqual(det(m), 1)

    def test_05_zero_row(self):
        m = FieldMatrix([[0, 0], [poly("t1"), 1]], T2)
        self.assertTrue(det(m).is_zero())

    def test_06_solve_right(self):
        """m X = rhs is satisfied exactly."""
        a = FieldMatrix(random_poly_matrix(self.rng, 3), T2)
        while det(a).is_zero():
            a = FieldMatrix(random_poly_matrix(self.rng, 3), T2)
        rhs = FieldMatrix(random_poly_matrix(self.rng, 3), T2).delete_row(0).transpose()
        x = solve_right(a, rhs)
        self.assertEqual(a @ x, rhs)
        self.assertEqual(a @ inverse(a), FieldMatrix.identity(3, T2))

    def test_07_singular_solve(self):
        m = FieldMatrix([[poly("t1"), poly("t2")], [poly("t1^2"), poly("t1*t2")]], T2)
        with self.assertRaises(SingularMatrixError):
            solve_right(m, FieldMatrix.identity(2, T2))

    def test_08_augmentation(self):
        m = FieldMatrix([[poly("t1 - t2 + 3"), poly("t1^-1*t2")]], T2)
        self.assertEqual(augmentation(m), sympy.Matrix([[3, 1]]))

    def test_09_minors(self):
        rows = [[poly("1", T), poly("t", T)], [poly("t", T), poly("t^2", T)], [poly("2", T), poly("0", T)]]
        self.assertEqual(len(minors(rows, 2, T)), 3)
        self.assertEqual(minors(rows, 2, T)[0], LaurentPoly.zero(T))
        self.assertEqual(minors(rows, 0, T), [LaurentPoly.one(T)])
        self.assertEqual(len(minors(rows, 1, T)), 6)


class TorsionClassTests(unittest.TestCase):
    """Test equality up to ±monomials."""

    def test_01_units(self):
        a = TorsionClass(RationalFunction(poly("-t1^3*t2^-1")))
        self.assertTrue(a.is_trivial())
        self.assertEqual(a, TorsionClass(RationalFunction.one(T2)))

    def test_02_shift_and_sign(self):
        p = poly("1 - t1*t2^2 - t1*t2^3")
        a = TorsionClass(RationalFunction(p))
        b = TorsionClass(RationalFunction(-p.shift((3, -1))))
        self.assertEqual(a, b)
        self.assertFalse(a.is_trivial())

    def test_03_not_equal(self):
        a = TorsionClass(RationalFunction(poly("1 - t1")))
        b = TorsionClass(RationalFunction(poly("2 - 2*t1")))
        c = TorsionClass(RationalFunction(poly("1 + t1")))
        self.assertNotEqual(a, b)
        self.assertNotEqual(a, c)

    def test_04_quotients(self):
        """Classes of quotients compare across different representatives."""
        a = TorsionClass(RationalFunction(poly("t^2 - t + 1", T), poly("1 - t", T)))
        b = TorsionClass(RationalFunction(poly("t^-1 - 1 + t", T), poly("t^-1 - 1", T)))
        self.assertEqual(a, b)

    def test_05_zero(self):
        with self.assertRaises(DomainError):
            TorsionClass(RationalFunction.zero(T))

    def test_06_equivalence_relation(self):
        """Reflexive, symmetric and transitive on unit multiples of a base value."""
        rng = np.random.default_rng(3)
        base = RationalFunction(poly("t1 - t2 + 2"), poly("1 - t1*t2"))

        def unit_multiple():
            exps = tuple(int(e) for e in rng.integers(-3, 4, size=2))
            sign = 1 if rng.random() < 0.5 else -1
            return TorsionClass(base * RationalFunction(LaurentPoly.monomial(T2, exps, sign)))

        for _ in range(20):
            a, b, c = unit_multiple(), unit_multiple(), unit_multiple()
            self.assertEqual(a, a)
            self.assertEqual(a == b, b == a)
            self.assertTrue(a == b and b == c and a == c)

    def test_07_unit_with_common_factor(self):
        """Unit values written with a shared non-unit factor are trivial."""
        self.assertTrue(TorsionClass(RationalFunction(poly("1 - t1"), poly("t1 - 1"))).is_trivial())
        shared = poly("1 - t1*t2 + t2^2")
        value = RationalFunction(shared * poly("-t1^2*t2"), shared)
        self.assertTrue(TorsionClass(value).is_trivial())
        self.assertFalse(TorsionClass(RationalFunction(shared, poly("1 - t1"))).is_trivial())
        self.assertFalse(TorsionClass(RationalFunction(poly("2"), poly("1"))).is_trivial())


if __name__ == '__main__':
    unittest.main()
