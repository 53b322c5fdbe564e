"""
Homology cylinders from admissible presentations.

Given an admissible presentation of pi_1(M)

    < minus gens, aux gens, plus gens | relators >,  deficiency 2g+n-1,

and a monomial homomorphism rho to a free abelian group, this module builds
the involuted Fox blocks A, B, C, the torsion det(A;B) and the Magnus matrix
-C (A;B)^-1 (I;0), and reports the fibering obstructions they carry.

Author: Robert Torres
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from ..algebra.field import FieldMatrix, TorsionClass, augmentation, det, solve_right
from ..algebra.laurent import LaurentPoly
from ..algebra.word import MonomialMap, Word, fox_matrix, invert
from ..exceptions import (
    DomainError,
    NotRationalHomologyCylinderError,
    PresentationError,
    SingularMatrixError,
    UnknownGeneratorError,
)

logger = logging.getLogger(__name__)

PolyMatrix = List[List[LaurentPoly]]


@dataclass(frozen=True)
class AdmissiblePresentation:
    """Ordered presentation: rows of every matrix follow minus, aux, plus."""

    g: int
    n: int
    minus_gens: Tuple[str, ...]
    aux_gens: Tuple[str, ...]
    plus_gens: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self):
        for name in ('minus_gens', 'aux_gens', 'plus_gens', 'relators'):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @property
    def rank(self) -> int:
        return 2 * self.g + self.n - 1

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.minus_gens + self.aux_gens + self.plus_gens

    def with_relators(self, relators: Sequence[Word]) -> "AdmissiblePresentation":
        return replace(self, relators=tuple(relators))

    def structural_issues(self) -> List[Dict[str, Any]]:
        issues = []
        rank = self.rank
        if self.g < 0 or self.n < 1:
            issues.append({"type": "surface", "details": f"Invalid surface data g={self.g}, n={self.n}"})
        for label, gens in (("minus", self.minus_gens), ("plus", self.plus_gens)):
            if len(gens) != rank:
                issues.append({"type": "rank_mismatch",
                               "details": f"{label} has {len(gens)} generators, expected 2g+n-1 = {rank}"})
        expected = rank + len(self.aux_gens)
        if len(self.relators) != expected:
            issues.append({"type": "deficiency",
                           "details": f"{len(self.relators)} relators, expected {expected} "
                                      f"(deficiency must be 2g+n-1 = {rank})"})
        seen = set()
        for gen in self.generators:
            if gen in seen:
                issues.append({"type": "duplicate_generator", "generator": gen,
                               "details": f"Generator {gen} declared more than once"})
            seen.add(gen)
        for index, relator in enumerate(self.relators):
            unknown = [g for g in relator.generators() if g not in seen]
            if unknown:
                issues.append({"type": "unknown_generator", "relator": index,
                               "details": f"Relator {index + 1} ({relator}) uses undeclared {unknown}"})
        return issues


@dataclass(frozen=True)
class AbelianRho:
    """Monomial-valued homomorphism on the generators of a presentation."""

    map: MonomialMap

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.map.variables

    def __getitem__(self, generator: str):
        return self.map[generator]


@dataclass
class CylinderInvariants:
    torsion: Optional[TorsionClass]
    magnus: Optional[FieldMatrix]
    sigma_specialized: sympy.Matrix


@dataclass
class FiberingReport:
    """Fibering obstructions: nontrivial torsion, or Magnus entries outside Z[Gamma]."""

    torsion: TorsionClass
    torsion_trivial: bool
    magnus_integral: bool
    non_integral_entries: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def obstructed(self) -> bool:
        return not (self.torsion_trivial and self.magnus_integral)

    @property
    def verdict(self) -> str:
        return "obstructed: not fibered" if self.obstructed else "unobstructed"

    def reasons(self) -> List[str]:
        reasons = []
        if not self.torsion_trivial:
            reasons.append("torsion nontrivial")
        if not self.magnus_integral:
            reasons.append("Magnus matrix non-integral")
        return reasons

    def to_dict(self) -> Dict[str, Any]:
        return {
            "torsion": self.torsion.to_dict(),
            "torsion_trivial": self.torsion_trivial,
            "magnus_integral": self.magnus_integral,
            "non_integral_entries": [list(pos) for pos in self.non_integral_entries],
            "obstructed": self.obstructed,
            "verdict": self.verdict,
        }


def infer_rho(p: AdmissiblePresentation, partial: MonomialMap) -> AbelianRho:
    """
    Extend a partial rho to every generator using the relators.

    A relator with exactly one generator of unknown image, occurring with
    exponent sum ±1, determines that image. Repeats until nothing changes.

    Raises:
        UnknownGeneratorError: some generator's image cannot be determined
    """
    return AbelianRho(infer_images(p.generators, p.relators, partial))


def infer_images(generators: Sequence[str], relators: Sequence[Word],
                 partial: MonomialMap) -> MonomialMap:
    known: Dict[str, Tuple[int, ...]] = {g: v for g, v in partial.assignment.items()}
    width = len(partial.variables)
    changed = True
    while changed:
        changed = False
        for relator in relators:
            unknown = [g for g in relator.generators() if g not in known]
            if len(unknown) != 1:
                continue
            target = unknown[0]
            exponent = relator.exponent_sum(target)
            if exponent not in (1, -1):
                continue
            total = [0] * width
            for gen, power in relator.letters:
                if gen != target:
                    for i, e in enumerate(known[gen]):
                        total[i] += power * e
            known[target] = tuple(-exponent * v for v in total)
            changed = True
    missing = [g for g in generators if g not in known]
    if missing:
        raise UnknownGeneratorError(
            f"rho is missing generator(s) {missing} and the relators do not determine them",
            missing)
    return MonomialMap(partial.variables, {g: known[g] for g in generators})


def validate(p: AdmissiblePresentation, rho: AbelianRho) -> List[Dict[str, Any]]:
    """Structural checks plus rho(r) = 1 for every relator. Empty list means ok."""
    issues = p.structural_issues()
    missing = [g for g in p.generators if g not in rho.map]
    if missing:
        issues.append({"type": "rho_missing", "generators": missing,
                       "details": f"rho is not defined on {missing}"})
        return issues
    for index, relator in enumerate(p.relators):
        try:
            image = rho.map.image(relator)
        except UnknownGeneratorError:
            continue
        if not image.is_constant():
            issues.append({"type": "rho_relator", "relator": index,
                           "details": f"rho(relator {index + 1}) = {image}, expected 1"})
    return issues


def require_valid(p: AdmissiblePresentation, rho: AbelianRho) -> None:
    issues = validate(p, rho)
    if issues:
        summary = "; ".join(issue["details"] for issue in issues)
        logger.error(f"Invalid cylinder presentation: {summary}")
        raise PresentationError(f"Invalid cylinder presentation: {summary}", issues)


def abc_matrices(p: AdmissiblePresentation, rho: AbelianRho) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """Involuted Fox blocks; rows are generators, columns relators."""
    require_valid(p, rho)
    a = fox_matrix(p.relators, p.minus_gens, rho.map)
    b = fox_matrix(p.relators, p.aux_gens, rho.map)
    c = fox_matrix(p.relators, p.plus_gens, rho.map)
    return a, b, c


def _stacked(p: AdmissiblePresentation, rho: AbelianRho) -> Tuple[FieldMatrix, FieldMatrix]:
    a, b, c = abc_matrices(p, rho)
    size = len(p.relators)
    variables = rho.variables
    return FieldMatrix(a + b, variables, size), FieldMatrix(c, variables, size)


def torsion_plus(p: AdmissiblePresentation, rho: AbelianRho) -> TorsionClass:
    """
    Class of det(A;B).

    Raises:
        NotRationalHomologyCylinderError: (A;B) is singular
    """
    ab, _ = _stacked(p, rho)
    value = det(ab)
    if value.is_zero():
        raise NotRationalHomologyCylinderError(
            "(A;B) is singular: not a rational homology cylinder for this rho")
    logger.info(f"Torsion of {ab.rows}x{ab.cols} presentation: {value}")
    return TorsionClass(value)


def magnus(p: AdmissiblePresentation, rho: AbelianRho) -> FieldMatrix:
    """
    Magnus matrix -C (A;B)^-1 (I;0).

    Raises:
        NotRationalHomologyCylinderError: (A;B) is singular
    """
    ab, c = _stacked(p, rho)
    rank = p.rank
    variables = rho.variables
    selector = FieldMatrix.identity(rank, variables).vstack(
        FieldMatrix.zeros(len(p.aux_gens), rank, variables))
    try:
        solution = solve_right(ab, selector)
    except SingularMatrixError:
        raise NotRationalHomologyCylinderError(
            "(A;B) is singular: not a rational homology cylinder for this rho") from None
    return -(c @ solution)


def sigma_specialized(p: AdmissiblePresentation, rho: AbelianRho) -> sympy.Matrix:
    """Magnus matrix with every variable sent to 1."""
    return augmentation(magnus(p, rho))


def cylinder_invariants(p: AdmissiblePresentation, rho: AbelianRho) -> CylinderInvariants:
    torsion = torsion_plus(p, rho)
    matrix = magnus(p, rho)
    return CylinderInvariants(torsion=torsion, magnus=matrix, sigma_specialized=augmentation(matrix))


def fibering_report(p: AdmissiblePresentation, rho: AbelianRho) -> FiberingReport:
    """Both fibering obstructions: nontrivial torsion and non-Laurent Magnus entries."""
    torsion = torsion_plus(p, rho)
    matrix = magnus(p, rho)
    bad = matrix.non_laurent_positions()
    report = FiberingReport(torsion=torsion, torsion_trivial=torsion.is_trivial(),
                            magnus_integral=not bad, non_integral_entries=bad)
    logger.info(f"Fibering report: {report.verdict}")
    return report


def compose(p1: AdmissiblePresentation, rho1: AbelianRho,
            p2: AdmissiblePresentation, rho2: AbelianRho) -> CylinderInvariants:
    """
    sigma of the stacked cylinder, sigma(p1) * sigma(p2).

    Only sigma is composed; torsion and Magnus matrix are left unset.
    """
    if (p1.g, p1.n) != (p2.g, p2.n):
        raise DomainError(f"Cannot stack cylinders over ({p1.g},{p1.n}) and ({p2.g},{p2.n})")
    product = sigma_specialized(p1, rho1) * sigma_specialized(p2, rho2)
    return CylinderInvariants(torsion=None, magnus=None, sigma_specialized=product)


# Tietze moves preserving admissibility

def conjugate_relator(p: AdmissiblePresentation, index: int, by: Word) -> AdmissiblePresentation:
    relators = list(p.relators)
    relators[index] = by * relators[index] * invert(by)
    return p.with_relators(relators)


def multiply_relators(p: AdmissiblePresentation, index: int, other: int,
                      power: int = 1) -> AdmissiblePresentation:
    if index == other:
        raise DomainError("A relator cannot be multiplied by itself")
    relators = list(p.relators)
    relators[index] = relators[index] * relators[other] ** power
    return p.with_relators(relators)


# Mapping-class cylinders

def mapping_class_cylinder(images: Mapping[str, Word], basis: Sequence[str], g: int, n: int,
                           rho: Optional[MonomialMap] = None) -> Tuple[AdmissiblePresentation, AbelianRho]:
    """
    Product cylinder of a free-group automorphism phi on `basis`:

        < m_j, p_j | m_j * phi(gamma_j)(p)^-1 >,

    with m_j = f"{gamma_j}m", p_j = f"{gamma_j}p". rho is given on the basis
    (default: gamma_i -> t_i) and copied to the plus side; the minus side is inferred.
    """
    basis = tuple(basis)
    if len(basis) != 2 * g + n - 1:
        raise DomainError(f"Basis of length {len(basis)} does not match 2g+n-1 = {2 * g + n - 1}")
    to_plus = {gamma: f"{gamma}p" for gamma in basis}
    minus = tuple(f"{gamma}m" for gamma in basis)
    plus = tuple(to_plus[gamma] for gamma in basis)
    relators = []
    for gamma, m in zip(basis, minus):
        image = images.get(gamma, Word.generator(gamma))
        relators.append(Word.generator(m) * invert(image.rename(to_plus)))
    presentation = AdmissiblePresentation(g, n, minus, (), plus, tuple(relators))
    if rho is None:
        variables = tuple(f"t{i + 1}" for i in range(len(basis)))
        rho = MonomialMap(variables, {gamma: tuple(1 if j == i else 0 for j in range(len(basis)))
                                      for i, gamma in enumerate(basis)})
    partial = MonomialMap(rho.variables, {to_plus[gamma]: rho[gamma] for gamma in basis})
    return presentation, infer_rho(presentation, partial)


def fox_jacobian(images: Mapping[str, Word], basis: Sequence[str], rho: MonomialMap) -> FieldMatrix:
    """Involuted rho-image of (d phi(gamma_j) / d gamma_i); rows i, columns j."""
    words = [images.get(gamma, Word.generator(gamma)) for gamma in basis]
    rows = fox_matrix(words, basis, rho)
    return FieldMatrix(rows, rho.variables, len(basis))


def apply_automorphism(images: Mapping[str, Word], word: Word) -> Word:
    return word.substitute(images)


def compose_automorphisms(first: Mapping[str, Word], second: Mapping[str, Word],
                          basis: Sequence[str]) -> Dict[str, Word]:
    """(first o second)(gamma) = first(second(gamma))."""
    return {gamma: apply_automorphism(first, second.get(gamma, Word.generator(gamma)))
            for gamma in basis}


def dehn_twist_11(curve: str, power: int = 1, a: str = "a", b: str = "b") -> Dict[str, Word]:
    """
    Dehn twists generating the mapping class group of the one-holed torus,
    acting on pi_1 = <a, b> and fixing the boundary word [a, b].

    curve="a": b -> b a;  curve="b": a -> a b.
    """
    if curve == "a":
        images = {a: Word.generator(a), b: Word.generator(b) * Word.generator(a, 1 if power > 0 else -1)}
    elif curve == "b":
        images = {a: Word.generator(a) * Word.generator(b, 1 if power > 0 else -1), b: Word.generator(b)}
    else:
        raise DomainError(f"Invalid curve: {curve}. Must be one of: a, b")
    result = {a: Word.generator(a), b: Word.generator(b)}
    for _ in range(abs(power)):
        result = compose_automorphisms(result, images, (a, b))
    return result


def partial_conjugation(basis: Sequence[str], index: int, by: Word) -> Dict[str, Word]:
    """gamma_index -> w gamma_index w^-1, other generators fixed (acts trivially on homology)."""
    gamma = basis[index]
    if gamma in by.generators():
        raise DomainError(f"Conjugating word must avoid {gamma} to give an automorphism")
    images = {g: Word.generator(g) for g in basis}
    images[gamma] = by * Word.generator(gamma) * invert(by)
    return images


def random_mapping_class(rng, length: int = 6) -> Dict[str, Word]:
    """Random product of Dehn twists on the one-holed torus; rng is a numpy Generator."""
    result = {"a": Word.generator("a"), "b": Word.generator("b")}
    for _ in range(length):
        curve = "a" if rng.random() < 0.5 else "b"
        power = 1 if rng.random() < 0.5 else -1
        result = compose_automorphisms(result, dehn_twist_11(curve, power), ("a", "b"))
    return result


def random_ia_automorphism(basis: Sequence[str], rng, moves: int = 3, length: int = 3) -> Dict[str, Word]:
    """Random product of partial conjugations; acts trivially on homology."""
    result = {g: Word.generator(g) for g in basis}
    for _ in range(moves):
        index = int(rng.integers(len(basis)))
        others = [g for i, g in enumerate(basis) if i != index]
        letters = [(others[int(rng.integers(len(others)))], 1 if rng.random() < 0.5 else -1)
                   for _ in range(length)]
        step = partial_conjugation(basis, index, Word(tuple(letters)))
        result = compose_automorphisms(result, step, basis)
    return result
