"""Exact algebra: free-group words, Laurent polynomials and their fraction field."""

from .field import (
    FieldMatrix,
    RationalFunction,
    TorsionClass,
    bareiss_det,
    det,
    eq_up_to_unit,
    rf_add,
    rf_eq,
    rf_inv,
    rf_mul,
    solve_right,
    specialize_matrix,
)
from .laurent import (
    LaurentPoly,
    NormalizedAlexander,
    constant_term,
    evaluate,
    exact_divide,
    is_monomial_unit,
    normalize_alexander,
    specialize,
    try_divide,
)
from .word import MonomialMap, Word, fox_derivative_abelianized, fox_matrix, invert, involute, reduce

__all__ = [
    'FieldMatrix', 'RationalFunction', 'TorsionClass', 'bareiss_det', 'det', 'eq_up_to_unit',
    'rf_add', 'rf_eq', 'rf_inv', 'rf_mul', 'solve_right', 'specialize_matrix',
    'LaurentPoly', 'NormalizedAlexander', 'constant_term', 'evaluate', 'exact_divide',
    'is_monomial_unit', 'normalize_alexander', 'specialize', 'try_divide',
    'MonomialMap', 'Word', 'fox_derivative_abelianized', 'fox_matrix', 'invert', 'involute', 'reduce',
]
