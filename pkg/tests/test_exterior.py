"""
Homology Cylinder Invariants - Exterior Tests

This module provides tests for:
1. Torsion of deficiency-one exterior presentations
2. The factorization of exterior torsion through the cylinder
3. Alexander polynomials by Milnor's formula
4. Lower bounds on the number of generators

Author: Robert Torres
"""

import logging

import pytest

from src.algebra.field import RationalFunction, TorsionClass
from src.algebra.laurent import LaurentPoly
from src.algebra.word import MonomialMap, Word, random_word
from src.cli.parser import parse_input
from src.exceptions import (
    DegenerateAlexanderError,
    DomainError,
    InvalidDropError,
    NonAcyclicError,
    PresentationError,
    VariableMismatchError,
)
from src.invariants.cylinder import (
    mapping_class_cylinder,
    random_ia_automorphism,
    random_mapping_class,
)
from src.invariants.exterior import (
    ExteriorPresentation,
    MeridianDatum,
    augmented_rho,
    build_exterior_presentation,
    closure_data,
    elementary_minors,
    factorization,
    factorization_with_closure,
    generator_lower_bound,
    handle_number_lower_bound,
    milnor_alexander,
    milnor_from_cylinder,
    multivariable_alexander,
    rho_factors,
    torsion_exterior,
    verify_factorization,
)
from src.invariants.pretzel import Pretzel3, alexander3
from src.invariants.seifert import alexander, alexander_module_matrix, load_seifert

T = ("t",)
T2 = ("t1", "t2")


def poly(text, variables=T):
    return LaurentPoly.parse(text, variables)


def exterior_input(inputs_dir, name):
    return parse_input(str(inputs_dir / name)).exterior


def random_exterior(rng):
    """Three generators, two commutator relators, rho onto Z^2."""
    alphabet = ["a", "b", "c"]
    relators = []
    for _ in range(2):
        u = random_word(alphabet, 3, rng)
        v = random_word(alphabet, 3, rng)
        relators.append(u * v * ~u * ~v)
    rho = MonomialMap(T2, {"a": (1, 0), "b": (0, 1), "c": (1, 1)})
    return ExteriorPresentation(generators=tuple(alphabet), relators=tuple(relators), rho=rho)


class TestExteriorTorsion:
    """Test det(J_i) / (1 - rho(y_i)^-1)."""

    def test_trefoil(self, inputs_dir):
        q = exterior_input(inputs_dir, "trefoil.ext")
        expected = TorsionClass(RationalFunction(poly("t^2 - t + 1"), poly("1 - t")))
        assert torsion_exterior(q) == expected
        assert torsion_exterior(q, "b") == expected
        assert torsion_exterior(q, 1) == expected

    def test_unknot(self, inputs_dir):
        q = exterior_input(inputs_dir, "unknot.ext")
        assert torsion_exterior(q) == TorsionClass(RationalFunction(poly("1"), poly("1 - t")))

    def test_hopf_link(self, inputs_dir):
        """Two-component link: the torsion is the multivariable Alexander polynomial, here 1."""
        q = exterior_input(inputs_dir, "hopf.ext")
        assert torsion_exterior(q, "a").is_trivial()
        assert torsion_exterior(q, "b").is_trivial()
        assert multivariable_alexander(q).is_trivial()
        value = torsion_exterior(q, "a").value
        assert value.den == 1
        assert value.num.is_monomial_unit()

    def test_drop_independence(self, rng):
        """Every valid drop gives the same class on 50 acyclic presentations."""
        checked, draws = 0, 0
        while checked < 50 and draws < 1000:
            draws += 1
            q = random_exterior(rng)
            try:
                first = torsion_exterior(q, 0)
            except NonAcyclicError:
                for index in (1, 2):
                    with pytest.raises(NonAcyclicError):
                        torsion_exterior(q, index)
                continue
            assert torsion_exterior(q, 1) == first
            assert torsion_exterior(q, 2) == first
            checked += 1
        assert checked == 50

    def test_invalid_drop(self):
        rho = MonomialMap(T, {"a": (1,), "c": (0,)})
        q = ExteriorPresentation(generators=("a", "c"), relators=(Word.parse("c"),), rho=rho)
        with pytest.raises(InvalidDropError):
            torsion_exterior(q, "c")
        with pytest.raises(InvalidDropError):
            torsion_exterior(q, "z")
        with pytest.raises(InvalidDropError):
            torsion_exterior(q, 5)
        assert q.default_drop() == 0

    def test_non_acyclic(self):
        """A split presentation has vanishing Alexander polynomial."""
        rho = MonomialMap(T, {"a": (1,), "b": (1,)})
        q = ExteriorPresentation(generators=("a", "b"), relators=(Word.parse("1"),), rho=rho)
        with pytest.raises(NonAcyclicError):
            torsion_exterior(q)
        with pytest.raises(DegenerateAlexanderError):
            milnor_alexander(q)


class TestExteriorPresentation:
    """Test the presentation checks."""

    def test_deficiency(self):
        rho = MonomialMap(T, {"a": (1,), "b": (1,)})
        with pytest.raises(PresentationError) as exc:
            ExteriorPresentation(generators=("a", "b"), relators=(), rho=rho)
        assert exc.value.issues[0]["type"] == "deficiency"

    def test_rho_relator(self):
        rho = MonomialMap(T, {"a": (1,), "b": (1,)})
        with pytest.raises(PresentationError) as exc:
            ExteriorPresentation(generators=("a", "b"), relators=(Word.parse("a b"),), rho=rho)
        assert [issue["type"] for issue in exc.value.issues] == ["rho_relator"]

    def test_rho_trivial(self):
        rho = MonomialMap(T, {"a": (0,)})
        with pytest.raises(PresentationError) as exc:
            ExteriorPresentation(generators=("a",), relators=(), rho=rho)
        assert [issue["type"] for issue in exc.value.issues] == ["rho_trivial"]

    def test_unknown_meridian(self):
        rho = MonomialMap(T, {"a": (1,)})
        with pytest.raises(PresentationError):
            ExteriorPresentation(generators=("a",), relators=(), rho=rho, mu="m")

    def test_meridian_datum(self):
        with pytest.raises(DomainError):
            MeridianDatum("mu", {"s": 0})


class TestClosure:
    """Test closing a cylinder up into a link exterior."""

    def test_build_identity(self, identity_cylinder):
        p, rho = identity_cylinder
        q = build_exterior_presentation(p, rho, MeridianDatum("mu", {"s": 1}))
        assert q.generators == ("am", "bm", "ap", "bp", "mu")
        assert q.variables == ("t1", "t2", "s")
        assert q.rho["mu"] == (0, 0, 1)
        assert str(q.relators[2]) == "am mu ap^-1 mu^-1"

    def test_rho_must_factor(self, p359):
        p, rho = p359
        assert not rho_factors(p, rho)
        with pytest.raises(PresentationError):
            build_exterior_presentation(p, rho, MeridianDatum("mu", {"s": 1}))

    def test_name_clash(self, identity_cylinder):
        p, rho = identity_cylinder
        with pytest.raises(PresentationError):
            build_exterior_presentation(p, rho, MeridianDatum("am", {"s": 1}))

    def test_closure_data(self, p359, identity_cylinder, caplog):
        p, rho = identity_cylinder
        closing, meridian, label = closure_data(p, rho)
        assert label == "given"
        assert closing == rho
        assert meridian.name == "mu"
        p, rho = p359
        with caplog.at_level(logging.WARNING):
            closing, _, label = closure_data(p, rho, "s")
        assert label == "augmented"
        assert closing.variables == ("s",)
        assert "augmented rho" in caplog.text


class TestFactorization:
    """Exterior torsion equals det(tau+) det(I - rho(mu) r) / (1 - rho(mu))."""

    def test_p359(self, p359):
        result = factorization_with_closure(*p359, "s")
        assert result.holds
        assert result.rho == "augmented"
        assert result.to_dict()["holds"] is True

    def test_identity_given_rho(self, identity_cylinder):
        p, rho = identity_cylinder
        assert verify_factorization(p, rho, MeridianDatum("mu", {"s": 1}))
        assert factorization_with_closure(p, rho).rho == "given"

    def test_identity_augmented(self, identity_cylinder):
        """Closing the product cylinder gives torsion 1 - s."""
        p, _ = identity_cylinder
        result = factorization(p, augmented_rho(p), MeridianDatum("mu", {"s": 1}))
        assert result.holds
        assert result.exterior == TorsionClass(RationalFunction(poly("1 - s", ("s",))))

    def test_random_mapping_classes(self, rng):
        for _ in range(5):
            images = random_mapping_class(rng, 4)
            p, rho = mapping_class_cylinder(images, ("a", "b"), 1, 1)
            assert factorization_with_closure(p, rho).holds

    def test_ia_automorphisms_given_rho(self, rng):
        """Automorphisms acting trivially on homology close up with the given rho."""
        basis = ("a", "b", "c")
        images = random_ia_automorphism(basis, rng, moves=2, length=2)
        p, rho = mapping_class_cylinder(images, basis, 1, 2)
        result = factorization_with_closure(p, rho)
        assert result.rho == "given"
        assert result.holds

    def test_corruption_control(self, identity_cylinder):
        """Changing one exponent in a closing relator breaks the identity."""
        p, _ = identity_cylinder
        rho = augmented_rho(p)
        meridian = MeridianDatum("mu", {"s": 1})
        q = build_exterior_presentation(p, rho, meridian)
        relators = list(q.relators)
        relators[2] = Word.parse("am mu^2 ap^-1 mu^-2")
        corrupted = ExteriorPresentation(generators=q.generators, relators=tuple(relators),
                                         rho=q.rho, mu=q.mu)
        product = factorization(p, rho, meridian).product
        assert torsion_exterior(q, "mu") == product
        assert torsion_exterior(corrupted, "mu") != product


class TestMilnor:
    """Alexander polynomials from exteriors and from cylinders."""

    def test_trefoil_exterior(self, inputs_dir, trefoil_seifert):
        result = milnor_alexander(exterior_input(inputs_dir, "trefoil.ext"))
        assert str(result) == "t^2 - t + 1 (degree 2)"
        assert result == alexander(trefoil_seifert)

    def test_unknot(self, inputs_dir):
        assert str(milnor_alexander(exterior_input(inputs_dir, "unknot.ext")).poly) == "1"

    def test_needs_one_variable(self, inputs_dir):
        with pytest.raises(VariableMismatchError):
            milnor_alexander(exterior_input(inputs_dir, "hopf.ext"))

    def test_p359_cylinder(self, p359, inputs_dir):
        """Cylinder route, Seifert route and closed form agree."""
        p, _ = p359
        result = milnor_from_cylinder(p)
        assert str(result.poly) == "t^2 - t + 1"
        assert result == alexander3(Pretzel3(-3, 5, 9))
        assert result == alexander(load_seifert((inputs_dir / "p359.seifert").read_text()))

    def test_monodromy_and_identity(self, trefoil_monodromy, identity_cylinder):
        assert str(milnor_from_cylinder(trefoil_monodromy[0]).poly) == "t^2 - t + 1"
        assert str(milnor_from_cylinder(identity_cylinder[0]).poly) == "t^2 - 2*t + 1"

    def test_variable_name(self, p359):
        result = milnor_from_cylinder(p359[0], var="x")
        assert result.poly.variables == ("x",)


class TestBounds:
    """Test elementary ideals and generator lower bounds."""

    def test_9_46(self, knot_9_46_seifert):
        """Two generators needed: E_0 vanishes at 2, E_1 has common factor 3 there."""
        result = generator_lower_bound(alexander_module_matrix(knot_9_46_seifert), variables=T)
        assert result.bound == 2
        assert result.certified
        assert [level["status"] for level in result.levels] == ["refuted", "refuted", "unit"]

    def test_trefoil(self, trefoil_seifert):
        result = generator_lower_bound(alexander_module_matrix(trefoil_seifert), variables=T)
        assert result.bound == 1
        assert result.certified

    def test_identity_cylinder(self, identity_cylinder):
        result = handle_number_lower_bound(*identity_cylinder)
        assert result.bound == 0
        assert result.certified
        assert result.to_dict()["levels"][0]["status"] == "unit"

    def test_p359(self, p359):
        result = handle_number_lower_bound(*p359)
        assert result.bound >= 1
        assert result.levels[0]["status"] == "refuted"

    def test_specialized(self, p359):
        """Sending t1 to 1 keeps level 0 refuted."""
        result = handle_number_lower_bound(*p359, specialize=["t1"])
        assert result.levels[0]["status"] == "refuted"

    def test_zero_matrix(self):
        result = generator_lower_bound([[LaurentPoly.zero(T)]], variables=T)
        assert result.bound == 1
        assert result.certified

    def test_elementary_minors(self, trefoil_seifert):
        m = alexander_module_matrix(trefoil_seifert)
        assert elementary_minors(m, 2) == [poly("t^2 - t + 1")]
        assert len(elementary_minors(m, 1)) == 4
        with pytest.raises(DomainError):
            elementary_minors(m, 3)
