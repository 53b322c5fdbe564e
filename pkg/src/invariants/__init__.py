"""Knot and homology cylinder invariants built on the algebra layer."""

from .cylinder import (
    AbelianRho,
    AdmissiblePresentation,
    CylinderInvariants,
    FiberingReport,
    compose,
    cylinder_invariants,
    fibering_report,
    infer_rho,
    magnus,
    mapping_class_cylinder,
    sigma_specialized,
    torsion_plus,
    validate,
)
from .exterior import (
    BoundResult,
    ExteriorPresentation,
    MeridianDatum,
    augmented_rho,
    build_exterior_presentation,
    elementary_minors,
    factorization,
    generator_lower_bound,
    handle_number_lower_bound,
    milnor_alexander,
    milnor_from_cylinder,
    multivariable_alexander,
    torsion_exterior,
    verify_factorization,
)
from .pretzel import Pretzel3, Pretzel5, alexander3, census3, census5, leading3, leading5
from .seifert import SeifertMatrix, Verdict, alexander, check_pairing_preserved, classify, factor_check, load_seifert, sigma

__all__ = [
    'AbelianRho', 'AdmissiblePresentation', 'CylinderInvariants', 'FiberingReport', 'compose',
    'cylinder_invariants', 'fibering_report', 'infer_rho', 'magnus', 'mapping_class_cylinder',
    'sigma_specialized', 'torsion_plus', 'validate',
    'BoundResult', 'ExteriorPresentation', 'MeridianDatum', 'augmented_rho',
    'build_exterior_presentation', 'elementary_minors', 'factorization', 'generator_lower_bound',
    'handle_number_lower_bound', 'milnor_alexander', 'milnor_from_cylinder',
    'multivariable_alexander', 'torsion_exterior', 'verify_factorization',
    'Pretzel3', 'Pretzel5', 'alexander3', 'census3', 'census5', 'leading3', 'leading5',
    'SeifertMatrix', 'Verdict', 'alexander', 'check_pairing_preserved', 'classify', 'factor_check',
    'load_seifert', 'sigma',
]
