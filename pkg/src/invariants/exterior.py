"""
Link exteriors: torsion from deficiency-one presentations, the cylinder
factorization, Milnor's formula for the Alexander polynomial, and lower
bounds on the number of generators of Alexander-type modules.

Author: Robert Torres
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from ..algebra.field import FieldMatrix, RationalFunction, TorsionClass, augmentation, bareiss_det, det, minors
from ..algebra.laurent import LaurentPoly, NormalizedAlexander, normalize_alexander
from ..algebra.word import MonomialMap, Word, fox_matrix, invert
from ..exceptions import (
    DegenerateAlexanderError,
    DomainError,
    InvalidDropError,
    NonAcyclicError,
    PresentationError,
    VariableMismatchError,
)
from .cylinder import AbelianRho, AdmissiblePresentation, abc_matrices, magnus, require_valid, torsion_plus

logger = logging.getLogger(__name__)

DEFAULT_EVALUATION_POINTS = (2, -2, 3, -3, 5, -5, 7)


@dataclass(frozen=True)
class MeridianDatum:
    """Meridian generator and its image, given as variable -> exponent."""

    name: str
    image: Mapping[str, int]

    def __post_init__(self):
        object.__setattr__(self, 'image', dict(self.image))
        if not any(self.image.values()):
            raise DomainError(f"Meridian {self.name} must have nontrivial image under rho")


@dataclass
class ExteriorPresentation:
    """Deficiency-one presentation with a monomial rho."""

    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]
    rho: MonomialMap
    mu: Optional[str] = None

    def __post_init__(self):
        self.generators = tuple(self.generators)
        self.relators = tuple(self.relators)
        issues = self.issues()
        if issues:
            summary = "; ".join(issue["details"] for issue in issues)
            raise PresentationError(f"Invalid exterior presentation: {summary}", issues)

    def issues(self) -> List[Dict[str, Any]]:
        issues = []
        if len(self.relators) != len(self.generators) - 1:
            issues.append({"type": "deficiency",
                           "details": f"{len(self.generators)} generators and {len(self.relators)} "
                                      f"relators; deficiency must be 1"})
        declared = set(self.generators)
        missing = [g for g in self.generators if g not in self.rho]
        if missing:
            issues.append({"type": "rho_missing", "generators": missing,
                           "details": f"rho is not defined on {missing}"})
        for index, relator in enumerate(self.relators):
            unknown = [g for g in relator.generators() if g not in declared]
            if unknown:
                issues.append({"type": "unknown_generator", "relator": index,
                               "details": f"Relator {index + 1} uses undeclared {unknown}"})
            elif not missing and any(self.rho.image_vector(relator)):
                issues.append({"type": "rho_relator", "relator": index,
                               "details": f"rho(relator {index + 1}) = "
                                          f"{self.rho.image(relator)}, expected 1"})
        if not missing and all(not any(self.rho[g]) for g in self.generators):
            issues.append({"type": "rho_trivial",
                           "details": "rho is trivial on every generator"})
        if self.mu is not None and self.mu not in declared:
            issues.append({"type": "unknown_generator",
                           "details": f"Meridian {self.mu} is not a generator"})
        return issues

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.rho.variables

    def default_drop(self) -> int:
        """Index of the meridian when declared, else of the first generator with rho != 1."""
        if self.mu is not None and any(self.rho[self.mu]):
            return self.generators.index(self.mu)
        for index, gen in enumerate(self.generators):
            if any(self.rho[gen]):
                return index
        raise InvalidDropError("rho is trivial on every generator")


def _drop_index(q: ExteriorPresentation, drop: Union[int, str, None]) -> int:
    if drop is None:
        return q.default_drop()
    if isinstance(drop, str):
        if drop not in q.generators:
            raise InvalidDropError(f"Cannot drop unknown generator {drop!r}")
        return q.generators.index(drop)
    if not 0 <= drop < len(q.generators):
        raise InvalidDropError(f"Drop index {drop} out of range 0..{len(q.generators) - 1}")
    return drop


def fox_jacobian_exterior(q: ExteriorPresentation) -> List[List[LaurentPoly]]:
    """Involuted rho-Fox matrix: rows generators, columns relators."""
    return fox_matrix(q.relators, q.generators, q.rho)


def torsion_exterior(q: ExteriorPresentation, drop: Union[int, str, None] = None) -> TorsionClass:
    """
    det(J_i) / (1 - rho(y_i)^-1) with J_i the Fox matrix minus row i.

    Raises:
        InvalidDropError: rho(y_i) = 1
        NonAcyclicError: det(J_i) = 0
    """
    index = _drop_index(q, drop)
    gen = q.generators[index]
    if not any(q.rho[gen]):
        raise InvalidDropError(f"rho({gen}) = 1; drop a generator with nontrivial image")
    jacobian = fox_jacobian_exterior(q)
    rows = jacobian[:index] + jacobian[index + 1:]
    variables = q.variables
    size = len(rows)
    minor = det(FieldMatrix(rows, variables, size)) if size else RationalFunction.one(variables)
    if minor.is_zero():
        raise NonAcyclicError(
            f"det(J_{index}) = 0: the exterior is not acyclic (Alexander polynomial vanishes)")
    factor = 1 - LaurentPoly.monomial(variables, tuple(-e for e in q.rho[gen]))
    value = minor / RationalFunction(factor)
    logger.info(f"Exterior torsion (dropping {gen}): {value}")
    return TorsionClass(value)


def multivariable_alexander(q: ExteriorPresentation, drop: Union[int, str, None] = None) -> TorsionClass:
    """Exterior torsion over H_1; for links with two or more components this is the Alexander polynomial."""
    return torsion_exterior(q, drop)


def augmented_rho(p: AdmissiblePresentation, mu_var: str = "s") -> AbelianRho:
    """Every cylinder generator to 1, over the single variable mu_var."""
    return AbelianRho(MonomialMap((mu_var,), {g: (0,) for g in p.generators}))


def build_exterior_presentation(p: AdmissiblePresentation, rho: AbelianRho,
                                mu: MeridianDatum) -> ExteriorPresentation:
    """
    Presentation of the exterior obtained by closing the cylinder:
    cylinder relators followed by minus_j * mu * plus_j^-1 * mu^-1.

    Raises:
        PresentationError: rho(minus_j) != rho(plus_j), so rho does not factor
            through the exterior's fundamental group
    """
    require_valid(p, rho)
    if mu.name in p.generators:
        raise PresentationError(f"Meridian name {mu.name!r} clashes with a cylinder generator")
    mismatched = [(m, pl) for m, pl in zip(p.minus_gens, p.plus_gens) if rho[m] != rho[pl]]
    if mismatched:
        raise PresentationError(
            f"rho(minus) != rho(plus) for {mismatched}; rho does not factor through the "
            f"exterior (try the augmented rho)",
            [{"type": "rho_boundary", "details": f"{m} vs {pl}"} for m, pl in mismatched])
    new_variables = [v for v in mu.image if v not in rho.variables]
    extended_vars = rho.variables + tuple(new_variables)
    mu_vector = tuple(mu.image.get(v, 0) for v in extended_vars)
    extended = rho.map.extended({mu.name: mu_vector}, new_variables)
    mu_word = Word.generator(mu.name)
    relators = list(p.relators)
    for m, pl in zip(p.minus_gens, p.plus_gens):
        relators.append(Word.generator(m) * mu_word * invert(Word.generator(pl)) * invert(mu_word))
    return ExteriorPresentation(generators=p.generators + (mu.name,), relators=tuple(relators),
                                rho=extended, mu=mu.name)


@dataclass
class FactorizationResult:
    holds: bool
    exterior: TorsionClass
    product: TorsionClass
    rho: str = "given"

    def to_dict(self) -> Dict[str, Any]:
        return {"holds": self.holds, "exterior_torsion": self.exterior.to_dict(),
                "cylinder_product": self.product.to_dict(), "rho": self.rho}


def factorization(p: AdmissiblePresentation, rho: AbelianRho, mu: MeridianDatum) -> FactorizationResult:
    """Compare the exterior torsion with det(tau+) det(I - rho(mu) r) / (1 - rho(mu))."""
    q = build_exterior_presentation(p, rho, mu)
    extended = AbelianRho(q.rho)
    exterior = torsion_exterior(q, mu.name)
    variables = extended.variables
    mu_image = LaurentPoly.monomial(variables, q.rho[mu.name])
    tau = torsion_plus(p, extended)
    r = magnus(p, extended)
    rank = p.rank
    shifted = FieldMatrix.identity(rank, variables) - r.scale(mu_image)
    value = tau.value * det(shifted) / RationalFunction(1 - mu_image)
    if value.is_zero():
        raise NonAcyclicError("det(I - rho(mu) r) = 0 for this cylinder")
    product = TorsionClass(value)
    holds = exterior == product
    logger.info(f"Factorization {'holds' if holds else 'FAILS'}: {exterior} vs {product}")
    return FactorizationResult(holds=holds, exterior=exterior, product=product)


def verify_factorization(p: AdmissiblePresentation, rho: AbelianRho, mu: MeridianDatum) -> bool:
    return factorization(p, rho, mu).holds


def rho_factors(p: AdmissiblePresentation, rho: AbelianRho) -> bool:
    """True iff rho(minus_j) = rho(plus_j) for every j, so rho extends over the closed-up exterior."""
    return all(rho[m] == rho[pl] for m, pl in zip(p.minus_gens, p.plus_gens))


def closure_data(p: AdmissiblePresentation, rho: AbelianRho,
                 mu_var: str = "s") -> Tuple[AbelianRho, MeridianDatum, str]:
    """
    rho and meridian for factorization(): the given rho when it factors,
    otherwise augmented_rho(p, mu_var). The third item labels the choice.
    """
    name = "mu"
    while name in p.generators:
        name += "_"
    meridian = MeridianDatum(name, {mu_var: 1})
    if rho_factors(p, rho):
        return rho, meridian, "given"
    logger.warning(f"rho does not factor through the exterior; using the augmented rho over {mu_var}")
    return augmented_rho(p, mu_var), meridian, "augmented"


def factorization_with_closure(p: AdmissiblePresentation, rho: AbelianRho,
                               mu_var: str = "s") -> FactorizationResult:
    closing_rho, meridian, label = closure_data(p, rho, mu_var)
    result = factorization(p, closing_rho, meridian)
    result.rho = label
    return result


def milnor_alexander(q: ExteriorPresentation, drop: Union[int, str, None] = None) -> NormalizedAlexander:
    """
    Normalized (1 - t) * tau for a one-variable rho.

    Raises:
        DegenerateAlexanderError: the torsion is undefined (Alexander polynomial 0)
    """
    if len(q.variables) != 1:
        raise VariableMismatchError(
            f"Milnor's formula needs a one-variable rho, got {q.variables}")
    try:
        tau = torsion_exterior(q, drop)
    except NonAcyclicError as e:
        raise DegenerateAlexanderError(f"Alexander polynomial is zero: {e}") from e
    t = LaurentPoly.variable(q.variables, q.variables[0])
    poly = (tau.value * (1 - t)).to_laurent()
    if poly is None:
        raise DomainError(f"(1 - t) * tau = {tau.value * (1 - t)} is not a Laurent polynomial")
    return normalize_alexander(poly)


def milnor_from_cylinder(p: AdmissiblePresentation, rho_aug: Optional[AbelianRho] = None,
                         var: str = "t") -> NormalizedAlexander:
    """
    det(tau+ at augmentation) * det(I - t sigma), sigma the augmented Magnus matrix.

    rho_aug defaults to augmented_rho(p, var); any rho trivial on the cylinder
    generators gives the same result.
    """
    if rho_aug is None:
        rho_aug = augmented_rho(p, var)
    scalar = _fraction(augmentation(FieldMatrix([[torsion_plus(p, rho_aug).value]], rho_aug.variables, 1))[0, 0])
    sigma = augmentation(magnus(p, rho_aug))
    t = LaurentPoly.variable((var,), var)
    rank = p.rank
    if rank == 0:
        return normalize_alexander(LaurentPoly.constant((var,), scalar))
    rows = [[(1 if i == j else 0) - t * _fraction(sigma[i, j]) for j in range(rank)]
            for i in range(rank)]
    return normalize_alexander(bareiss_det(rows).scale(scalar))


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


# Elementary ideals and generator lower bounds

def elementary_minors(m: Sequence[Sequence[LaurentPoly]], k: int,
                      variables: Optional[Sequence[str]] = None) -> List[LaurentPoly]:
    """All k x k minors of m (generators of the elementary ideal E_{rows-k})."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if k < 0 or k > min(rows, cols):
        raise DomainError(f"Minor size {k} out of range for a {rows}x{cols} matrix")
    if variables is None:
        variables = m[0][0].variables if rows and cols else ()
    return minors(m, k, variables)


@dataclass
class BoundResult:
    """Lower bound on the minimal number of generators of coker(m)."""

    bound: int
    certified: bool
    levels: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"bound": self.bound, "certified": self.certified, "levels": self.levels}


def _refuted_at(values: List[Fraction], point: int) -> Optional[int]:
    """
    Given the generators evaluated in Z[1/point], return a prime-to-point
    integer > 1 dividing all of them, or None.
    """
    scale = 1
    for v in values:
        while (v * scale).denominator != 1:
            scale *= abs(point)
    g = 0
    for v in values:
        g = gcd(g, int(v * scale))
    if g == 0:
        return 0
    base = abs(point)
    while True:
        common = gcd(g, base)
        if common == 1:
            break
        g //= common
    return g if g > 1 else None


def generator_lower_bound(m: Sequence[Sequence[LaurentPoly]],
                          evaluation_points: Sequence[int] = DEFAULT_EVALUATION_POINTS,
                          variables: Optional[Sequence[str]] = None) -> BoundResult:
    """
    Lower bound for the number of generators of the module presented by m
    (rows are generators, columns relations).

    Level j looks at E_j, generated by the (rows-j)-minors. A level is
    'unit' when some minor is ±monomial, 'refuted' when evaluating every
    generator at an integer point a leaves a common factor prime to a, and
    'unknown' otherwise. Every refuted level j proves more than j generators
    are needed, so the bound counts consecutive refuted levels from 0.
    'certified' means the next level exhibits a unit minor.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if variables is None:
        variables = m[0][0].variables if rows and cols else ()
    levels = []
    for j in range(rows + 1):
        size = rows - j
        if size == 0:
            levels.append({"level": j, "status": "unit", "witness": "E_j = (1)"})
            break
        if size > cols:
            levels.append({"level": j, "status": "refuted", "witness": "E_j = 0"})
            continue
        generators = elementary_minors(m, size, variables)
        if any(g.is_monomial_unit() for g in generators):
            levels.append({"level": j, "status": "unit", "witness": "±monomial minor"})
            break
        status = {"level": j, "status": "unknown", "witness": None}
        for point in evaluation_points:
            if point in (0, 1, -1):
                continue
            values = [Fraction(g.evaluate({v: point for v in variables})) for g in generators]
            factor = _refuted_at(values, point)
            if factor is not None:
                status = {"level": j, "status": "refuted",
                          "witness": f"all minors vanish at {point}" if factor == 0
                          else f"{factor} divides all minors at {point}"}
                break
        levels.append(status)
    bound = 0
    for level in levels:
        if level["status"] != "refuted":
            break
        bound += 1
    certified = bound < len(levels) and levels[bound]["status"] == "unit"
    logger.info(f"Generator lower bound {bound} (certified={certified})")
    return BoundResult(bound=bound, certified=certified, levels=levels)


def specialize_rows(m: Sequence[Sequence[LaurentPoly]], names: Sequence[str]) -> List[List[LaurentPoly]]:
    """Send each named variable to 1 (the map Z[s^±, t^±] -> Z[t^±])."""
    result = [list(row) for row in m]
    for name in names:
        result = [[entry.specialize(name, 1) for entry in row] for row in result]
    return result


def handle_number_lower_bound(p: AdmissiblePresentation, rho: AbelianRho,
                              specialize: Sequence[str] = (),
                              evaluation_points: Sequence[int] = DEFAULT_EVALUATION_POINTS) -> BoundResult:
    """generator_lower_bound for H_1(M, i_+ Sigma) presented by (A;B), after specialization."""
    a, b, _ = abc_matrices(p, rho)
    matrix = specialize_rows(a + b, specialize)
    variables = tuple(v for v in rho.variables if v not in set(specialize))
    return generator_lower_bound(matrix, evaluation_points, variables)
