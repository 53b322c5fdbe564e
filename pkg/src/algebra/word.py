"""
Free-group words and Fox calculus through an abelian homomorphism.

Words are run-length encoded as (generator, exponent) pairs. Fox derivatives
are evaluated directly in Z[t1^±, ..., tk^±] by composing with rho during the
left-to-right scan, using the left-derivative rules

    d(uv)/dg = du/dg + rho(u) * dv/dg,   dg/dg = 1,   d(g^-1)/dg = -rho(g)^-1.

Author: Robert Torres
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from ..exceptions import DomainError, InputSyntaxError, UnknownGeneratorError
from .laurent import Exponents, LaurentPoly

logger = logging.getLogger(__name__)

GENERATOR_RE = re.compile(r'^[A-Za-z0-9_]+$')
_TOKEN_RE = re.compile(r'^([A-Za-z0-9_]+)(?:\^([+-]?\d+))?$')

Letter = Tuple[str, int]


def check_generator_name(name: str) -> str:
    """Return name unchanged, or raise DomainError if it is not a valid generator name."""
    if not isinstance(name, str) or not GENERATOR_RE.match(name):
        raise DomainError(f"Invalid generator name: {name!r}. Must match [A-Za-z0-9_]+")
    return name


def _reduce_letters(raw: Iterable[Tuple[str, int]]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for gen, power in raw:
        power = int(power)
        if power == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + power
            stack.pop()
            if merged != 0:
                stack.append((gen, merged))
        else:
            stack.append((gen, power))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; the empty tuple is the identity."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, _ in self.letters:
            check_generator_name(gen)
        reduced = _reduce_letters(self.letters)
        if reduced != tuple(self.letters):
            object.__setattr__(self, 'letters', reduced)

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, name: str, power: int = 1) -> "Word":
        return cls(((name, power),))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Parse whitespace-separated tokens ``name`` or ``name^k``.

        A lone ``1`` denotes the identity.
        """
        raw = []
        for token in text.split():
            if token == '1':
                continue
            match = _TOKEN_RE.match(token)
            if not match:
                raise InputSyntaxError(f"Invalid word token {token!r} in {text!r}")
            power = int(match.group(2)) if match.group(2) is not None else 1
            if power == 0:
                raise InputSyntaxError(f"Zero exponent in token {token!r}")
            raw.append((match.group(1), power))
        return reduce(raw)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        return Word(base.letters * abs(n))

    def __len__(self) -> int:
        return sum(abs(power) for _, power in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(gen if power == 1 else f"{gen}^{power}" for gen, power in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> Tuple[str, ...]:
        """Generators in order of first appearance."""
        seen: Dict[str, None] = {}
        for gen, _ in self.letters:
            seen.setdefault(gen, None)
        return tuple(seen)

    def exponent_sum(self, generator: str) -> int:
        return sum(power for gen, power in self.letters if gen == generator)

    def expanded(self) -> Iterator[Letter]:
        """Yield single letters (generator, ±1)."""
        for gen, power in self.letters:
            step = 1 if power > 0 else -1
            for _ in range(abs(power)):
                yield gen, step

    def substitute(self, images: Mapping[str, "Word"]) -> "Word":
        """Replace every generator by its image word (generators without an image stay)."""
        result: List[Letter] = []
        for gen, power in self.letters:
            image = images.get(gen)
            if image is None:
                result.append((gen, power))
                continue
            piece = image if power > 0 else invert(image)
            result.extend(piece.letters * abs(power))
        return Word(tuple(result))

    def rename(self, mapping: Mapping[str, str]) -> "Word":
        return Word(tuple((mapping.get(gen, gen), power) for gen, power in self.letters))


def reduce(raw: Iterable[Tuple[str, int]]) -> Word:
    """Freely reduce a raw list of (generator, exponent) pairs."""
    return Word(tuple((check_generator_name(gen), int(power)) for gen, power in raw))


def invert(w: Word) -> Word:
    return Word(tuple((gen, -power) for gen, power in reversed(w.letters)))


@dataclass(frozen=True)
class MonomialMap:
    """
    Homomorphism from a free group to the free abelian group on `variables`.

    Each generator maps to an exponent vector; signs are always +1.
    """

    variables: Tuple[str, ...]
    assignment: Mapping[str, Exponents] = field(default_factory=dict)

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, 'variables', variables)
        cleaned: Dict[str, Exponents] = {}
        for gen, exps in dict(self.assignment).items():
            check_generator_name(gen)
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise DomainError(
                    f"Image of {gen!r} has {len(exps)} exponents, expected {len(variables)}")
            cleaned[gen] = exps
        object.__setattr__(self, 'assignment', cleaned)

    @classmethod
    def from_monomials(cls, variables: Sequence[str],
                       images: Mapping[str, LaurentPoly]) -> "MonomialMap":
        """Build from monomial Laurent polynomials with coefficient 1."""
        assignment = {}
        for gen, poly in images.items():
            if len(poly) != 1 or poly.leading_term()[1] != 1:
                raise DomainError(f"Image of {gen!r} must be a monomial with coefficient 1, got {poly}")
            assignment[gen] = poly.leading_term()[0]
        return cls(tuple(variables), assignment)

    def __contains__(self, generator: str) -> bool:
        return generator in self.assignment

    def __getitem__(self, generator: str) -> Exponents:
        try:
            return self.assignment[generator]
        except KeyError:
            raise UnknownGeneratorError(
                f"Generator {generator!r} is not in the domain of rho", [generator]) from None

    def domain(self) -> Tuple[str, ...]:
        return tuple(self.assignment)

    def zero_vector(self) -> Exponents:
        return (0,) * len(self.variables)

    def image_vector(self, w: Word) -> Exponents:
        total = [0] * len(self.variables)
        for gen, power in w.letters:
            vec = self[gen]
            for i, e in enumerate(vec):
                total[i] += power * e
        return tuple(total)

    def image(self, w: Word) -> LaurentPoly:
        return LaurentPoly.monomial(self.variables, self.image_vector(w))

    def generator_image(self, generator: str) -> LaurentPoly:
        return LaurentPoly.monomial(self.variables, self[generator])

    def is_trivial_on(self, w: Word) -> bool:
        return not any(self.image_vector(w))

    def extended(self, assignment: Mapping[str, Sequence[int]],
                 new_variables: Sequence[str] = ()) -> "MonomialMap":
        """Append variables (existing images get exponent 0 there) and add generators."""
        variables = self.variables + tuple(v for v in new_variables if v not in self.variables)
        pad = len(variables) - len(self.variables)
        merged = {gen: tuple(exps) + (0,) * pad for gen, exps in self.assignment.items()}
        for gen, exps in assignment.items():
            merged[gen] = tuple(exps)
        return MonomialMap(variables, merged)

    def render(self, generator: str) -> str:
        return str(self.generator_image(generator))


def fox_derivative_abelianized(w: Word, g: str, rho: MonomialMap) -> LaurentPoly:
    """
    rho(dw/dg), without the involution.

    Raises:
        UnknownGeneratorError: w or g uses a generator outside rho's domain
    """
    missing = [gen for gen in w.generators() if gen not in rho]
    if g not in rho:
        missing.append(g)
    if missing:
        raise UnknownGeneratorError(
            f"Generators {sorted(set(missing))} are not in the domain of rho", sorted(set(missing)))
    terms: Dict[Exponents, int] = {}
    prefix = list(rho.zero_vector())
    for gen, power in w.letters:
        vec = rho[gen]
        if gen == g:
            if power > 0:
                for k in range(power):
                    exps = tuple(p + k * v for p, v in zip(prefix, vec))
                    terms[exps] = terms.get(exps, 0) + 1
            else:
                for k in range(1, -power + 1):
                    exps = tuple(p - k * v for p, v in zip(prefix, vec))
                    terms[exps] = terms.get(exps, 0) - 1
        for i, v in enumerate(vec):
            prefix[i] += power * v
    return LaurentPoly(rho.variables, terms)


def involute(p: LaurentPoly) -> LaurentPoly:
    """Negate every exponent vector (the involution induced by x -> x^-1)."""
    return p.involute()


def fox_matrix(relators: Sequence[Word], generators: Sequence[str], rho: MonomialMap,
               involuted: bool = True) -> List[List[LaurentPoly]]:
    """
    Matrix of Fox derivatives: rows indexed by generators, columns by relators.

    Entry (i, j) is rho(d r_j / d g_i), involuted unless told otherwise.
    """
    rows = []
    for g in generators:
        row = []
        for r in relators:
            entry = fox_derivative_abelianized(r, g, rho)
            row.append(entry.involute() if involuted else entry)
        rows.append(row)
    return rows


def random_word(alphabet: Sequence[str], length: int, rng) -> Word:
    """Random word of at most `length` letters; rng is a numpy Generator."""
    letters = []
    for _ in range(length):
        gen = alphabet[int(rng.integers(len(alphabet)))]
        letters.append((gen, 1 if rng.random() < 0.5 else -1))
    return Word(tuple(letters))
