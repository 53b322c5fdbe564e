"""
Homology Cylinder Invariants - Check Tests

This module provides tests for:
1. Presentation checks on cylinder and exterior inputs
2. Pairing checks on Seifert matrices
3. Fibering obstruction and factorization checks
4. Running all checks over the input corpus

Author: Robert Torres
"""

import json

import pytest

from src.checks import (
    FactorizationCheck,
    FiberingObstructionCheck,
    PairingCheck,
    PresentationCheck,
    run_all_checks,
)
from src.checks.run_checks import collect_inputs, parse_failure
from src.cli.parser import parse_input, parse_text
from src.exceptions import InputSyntaxError


def parsed(inputs_dir, name):
    return parse_input(str(inputs_dir / name))


def issue_types(result):
    return [issue["type"] for issue in result["issues"]]


class TestPresentationCheck:
    """Test the presentation check."""

    def test_p359_passes(self, inputs_dir):
        result = PresentationCheck().run(parsed(inputs_dir, "p359.cyl"))
        assert result["status"] == "passed"
        assert result["generators"] == 6
        assert result["relators"] == 4
        assert result["check_name"] == "Presentation Check"

    def test_singular_cylinder(self):
        text = (
            "[cylinder] g=1 n=1\n"
            "minus: am bm\n"
            "plus: ap bp\n"
            "rel: am ap^-1\n"
            "rel: am ap^-1 bp bp^-1\n"
            "[rho] vars: t1 t2\n"
            "ap -> t1\n"
            "bp -> t2\n"
            "am -> t1\n"
            "bm -> t2\n"
        )
        result = PresentationCheck().run(parse_text(text, "singular.cyl"))
        assert result["status"] == "failed"
        assert issue_types(result) == ["singular"]

    def test_exterior_passes(self, inputs_dir):
        """Every droppable generator gives the same class."""
        result = PresentationCheck().run(parsed(inputs_dir, "trefoil.ext"))
        assert result["status"] == "passed"
        assert result["torsion"] is not None

    def test_applies_to(self, inputs_dir):
        check = PresentationCheck()
        assert check.applies_to(parsed(inputs_dir, "hopf.ext"))
        assert not check.applies_to(parsed(inputs_dir, "trefoil.seifert"))


class TestPairingCheck:
    """Test the Seifert matrix check."""

    def test_trefoil(self, inputs_dir):
        result = PairingCheck().run(parsed(inputs_dir, "trefoil.seifert"))
        assert result["status"] == "passed"
        assert result["verdict"] == "HomologicallyFibered"
        assert result["sigma"] == [["1", "-1"], ["1", "0"]]

    def test_rational_sigma(self, inputs_dir):
        """det S = -2: sigma is rational but still preserves the pairing."""
        result = PairingCheck().run(parsed(inputs_dir, "knot_9_46.seifert"))
        assert result["status"] == "passed"
        assert result["verdict"] == "RationallyHomologicallyFibered"
        assert result["det_s"] == -2

    def test_degenerate(self, inputs_dir):
        result = PairingCheck().run(parsed(inputs_dir, "degenerate.seifert"))
        assert result["status"] == "failed"
        assert issue_types(result) == ["singular"]


class TestFiberingObstructionCheck:
    """Test the fibering obstruction check."""

    def test_p359_obstructed(self, inputs_dir):
        check = FiberingObstructionCheck()
        result = check.run(parsed(inputs_dir, "p359.cyl"))
        assert result["status"] == "failed"
        assert issue_types(result) == ["torsion_nontrivial", "magnus_non_integral"]
        assert result["obstructed"] is True
        assert check.get_results() is result

    def test_monodromy_passes(self, inputs_dir):
        result = FiberingObstructionCheck().run(parsed(inputs_dir, "trefoil_monodromy.cyl"))
        assert result["status"] == "passed"
        assert result["verdict"] == "unobstructed"


class TestFactorizationCheck:
    """Test the factorization check."""

    def test_p359_holds(self, inputs_dir):
        result = FactorizationCheck().run(parsed(inputs_dir, "p359.cyl"))
        assert result["status"] == "passed"
        assert result["holds"] is True
        assert result["rho"] == "augmented"

    def test_identity_holds(self, inputs_dir):
        result = FactorizationCheck("u").run(parsed(inputs_dir, "identity.cyl"))
        assert result["status"] == "passed"
        assert result["rho"] == "given"


class TestRunAllChecks:
    """Test running every check over a corpus."""

    def test_collect_inputs(self, inputs_dir):
        files = collect_inputs([str(inputs_dir)])
        names = [name.rsplit("/", 1)[-1] for name in files]
        assert names == sorted(names)
        assert "p359.cyl" in names
        assert "hopf.ext" in names

    def test_corpus(self, inputs_dir, tmp_path):
        """Each input gets every applicable check; results are saved as JSON."""
        paths = [str(inputs_dir / name) for name in ("p359.cyl", "trefoil.seifert", "trefoil.ext")]
        results = run_all_checks(paths, results_dir=str(tmp_path), save=True)
        names = [(r["input"].rsplit("/", 1)[-1], r["check_name"]) for r in results]
        assert names == [
            ("p359.cyl", "Presentation Check"),
            ("p359.cyl", "Fibering Obstruction Check"),
            ("p359.cyl", "Factorization Check"),
            ("trefoil.seifert", "Pairing Check"),
            ("trefoil.ext", "Presentation Check"),
        ]
        saved = sorted(tmp_path.glob("*.json"))
        assert len(saved) == len(results)
        with open(saved[1]) as f:
            assert json.load(f)["check_name"] == "Fibering Obstruction Check"

    def test_no_save(self, inputs_dir, tmp_path):
        results = run_all_checks([str(inputs_dir / "identity.cyl")], results_dir=str(tmp_path), save=False)
        assert all(r["status"] == "passed" for r in results)
        assert list(tmp_path.iterdir()) == []

    def test_parse_failure(self, tmp_path):
        """Unparseable files are recorded, not fatal."""
        bad = tmp_path / "bad.seifert"
        bad.write_text("1 1\n1 x\n2 7\n")
        results = run_all_checks([str(bad)], results_dir=str(tmp_path / "out"), save=False)
        assert len(results) == 1
        assert results[0]["check_name"] == "Input Parse Check"
        assert issue_types(results[0]) == ["InputSyntaxError"]

    def test_parse_failure_record(self):
        record = parse_failure("x.cyl", InputSyntaxError("bad", "x.cyl", 1, 1))
        assert record["status"] == "failed"
        assert record["input"] == "x.cyl"

    @pytest.mark.parametrize("name", ["identity.cyl", "trefoil_monodromy.cyl", "hopf.ext", "unknot.ext"])
    def test_clean_inputs_pass(self, inputs_dir, name):
        results = run_all_checks([str(inputs_dir / name)], save=False)
        assert results
        assert all(r["status"] == "passed" for r in results)
