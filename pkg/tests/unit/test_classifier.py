# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""This module contains the pytest tests for classification, certificates and geometric equivalence."""

from __future__ import annotations

import pathlib
from typing import Callable, List

import pytest

from boolgeo.algebra import CAlgebra, builtin_algebra, format_element
from boolgeo.classifier import (
    AlgebraClass,
    RandomSystemGenerator,
    builtin_fixture,
    classify,
    evaluate_quasi_identity,
    geom_equivalent,
    parse_fixture,
    resolve_fixture,
    sample_quasi_identity_agreement,
    sample_radical_agreement,
    verify_ek_fixture,
)
from boolgeo.classifier.geometric import GeomKind
from boolgeo.common import FixtureRejectedError, NonIsomorphicConstantsError, ParseError, Verdict
from boolgeo.syntax import format_equation, format_quasi_identity, parse_quasi_identity

CHAIN_FIXTURE = """
include-algebra fc-chain
vars x1
each n=1.. : c{n} <= x1
k 1
"""


def _verdicts(calg: CAlgebra) -> List[Verdict]:
    return [v.verdict for v in classify(calg, bound=8, window=6)]


def test_algebra_class_from_str() -> None:
    """Test classes are found by value or by name."""
    assert AlgebraClass.from_str("N'") == AlgebraClass.N_PRIME
    assert AlgebraClass.from_str(" N_PRIME ") == AlgebraClass.N_PRIME
    assert AlgebraClass.from_str("U") == AlgebraClass.U

    with pytest.raises(ValueError):
        AlgebraClass.from_str("M")


def test_chain_e1_certificate() -> None:
    """Test the increasing chain fixture has many solutions per prefix and the single survivor 1."""
    certificate = verify_ek_fixture(builtin_fixture("chain-e1"), bound=5)

    assert certificate.passed, f"failures: {certificate.failures}"
    assert certificate.k == 1
    assert certificate.window == 4
    assert certificate.prefix_counts == (5, 5, 5, 5, 5)
    assert [format_element(s["x1"]) for s in certificate.survivors] == ["1"]


def test_chain_e0_certificate() -> None:
    """Test the parity fixture has no survivors in its window."""
    certificate = verify_ek_fixture(builtin_fixture("chain-e0"), bound=5)

    assert certificate.passed, f"failures: {certificate.failures}"
    assert certificate.k == 0
    assert certificate.survivors == ()


def test_certificate_with_a_wrong_solution() -> None:
    """Test a fixture declaring the wrong solution fails its certificate."""
    fixture = parse_fixture(CHAIN_FIXTURE + "solution 0\n", name="wrong")

    certificate = verify_ek_fixture(fixture, bound=5)

    assert not certificate.passed
    assert "(b) declared solution x1=0 violates c1 <= x1" in certificate.failures
    assert "(b) undeclared survivor x1=1 in window 4" in certificate.failures


def test_certificate_rejects_finite_constants(b2_c1: CAlgebra) -> None:
    """Test no E_k fixture is accepted over an algebra with a finite C."""
    with pytest.raises(FixtureRejectedError) as excinfo:
        verify_ek_fixture(builtin_fixture("chain-e1").with_algebra(b2_c1), bound=5)

    assert "equationally Noetherian" in str(excinfo.value)


def test_certificate_rejects_finite_systems() -> None:
    """Test a fixture without schematic equations is its own finite subsystem."""
    fixture = parse_fixture("include-algebra fc-chain\nvars x1\nx1 = 1\nk 1\nsolution 1\n", name="finite")

    with pytest.raises(FixtureRejectedError) as excinfo:
        verify_ek_fixture(fixture, bound=5)

    assert "finite system" in str(excinfo.value)


@pytest.mark.parametrize(
    "text, message, line",
    [
        (CHAIN_FIXTURE.replace("k 1\n", ""), "missing 'k <count>' line", 4),
        (CHAIN_FIXTURE, "'k 1' but 0 solutions are listed", 5),
        (CHAIN_FIXTURE + "solution 1 1\n", "expected 1 elements, got 2", 6),
        (CHAIN_FIXTURE + "k 1\n", "'k' declared twice", 6),
        (CHAIN_FIXTURE.replace("k 1", "k one"), "expected 'k <count>', got 'k one'", 5),
        ("vars x1\nx1 = 1\nk 0\n", "a fixture must bind its algebra", 1),
    ],
)
def test_fixture_errors(text: str, message: str, line: int) -> None:
    """Test malformed fixture files."""
    with pytest.raises(ParseError) as excinfo:
        parse_fixture(text, source="bad.fix")

    assert message in excinfo.value.message, f"expected '{message}' in '{excinfo.value.message}'"
    assert excinfo.value.line == line


def test_resolve_fixture(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test fixtures are found by built-in name or path."""
    path = write_file("chain.fix", CHAIN_FIXTURE + "solution 1\n")

    assert resolve_fixture("chain-e1").name == "chain-e1"
    assert resolve_fixture(str(path)).k == 1
    with pytest.raises(FileNotFoundError):
        resolve_fixture("no-such-fixture")
    with pytest.raises(KeyError):
        builtin_fixture("no-such-fixture")


def test_classify_finite_constants(b2_c1: CAlgebra) -> None:
    """Test a finite C puts the algebra in every class."""
    verdicts = classify(b2_c1, bound=8, window=6)

    assert [v.algebra_class for v in verdicts] == [
        AlgebraClass.N,
        AlgebraClass.N_PRIME,
        AlgebraClass.N_C,
        AlgebraClass.Q,
        AlgebraClass.U,
    ]
    assert all(v.verdict == Verdict.YES for v in verdicts)
    assert verdicts[0].evidence["|C|"] == "4"


def test_classify_chain(fc_chain: CAlgebra) -> None:
    """Test the increasing chain is in none of the classes."""
    verdicts = classify(fc_chain, bound=8, window=6)

    assert [v.verdict for v in verdicts] == [Verdict.NO] * 5
    assert verdicts[0].evidence["chain"].endswith(" < ...")
    assert verdicts[3].evidence["fixture"] == "chain-e1"
    assert verdicts[3].bound == 8


def test_classify_parity(fc_parity: CAlgebra) -> None:
    """Test the parity families are ruled out of compactness by the E_0 fixture."""
    verdicts = classify(fc_parity, bound=8, window=6)

    assert [v.verdict for v in verdicts] == [Verdict.NO] * 5
    assert verdicts[4].evidence["fixture"] == "chain-e0"


def test_classify_singletons() -> None:
    """Test compactness stays unknown when no fixture applies."""
    verdicts = _verdicts(builtin_algebra("fc-singletons"))

    assert verdicts == [Verdict.NO, Verdict.NO, Verdict.NO, Verdict.UNKNOWN, Verdict.UNKNOWN]


@pytest.mark.parametrize("first, second", [("b2-c1", "b3-c1"), ("fc-point", "b2-c1")])
def test_geometrically_equivalent_algebras(first: str, second: str) -> None:
    """Test algebras with the same finite C are geometrically equivalent."""
    verdict = geom_equivalent(builtin_algebra(first), builtin_algebra(second))

    assert verdict.kind == GeomKind.EQUIVALENT
    assert verdict.evidence["|C|"] == "4"


def test_geom_equivalent_shortcuts(b2_c1: CAlgebra, b3_c1: CAlgebra) -> None:
    """Test identical presentations and the subset cap."""
    assert geom_equivalent(b2_c1, b2_c1).evidence["reason"] == "identical presentations"

    capped = geom_equivalent(b2_c1, b3_c1, subset_cap=2)

    assert capped.kind == GeomKind.UNKNOWN
    assert capped.bound == 2


def test_geom_equivalent_needs_shared_constants(b2_c1: CAlgebra) -> None:
    """Test algebras with different constants cannot be compared."""
    with pytest.raises(NonIsomorphicConstantsError):
        geom_equivalent(b2_c1, builtin_algebra("fc-trivial"))


def test_sampled_agreement(b2_c1: CAlgebra, b3_c1: CAlgebra) -> None:
    """Test geometrically equivalent algebras agree on sampled radicals and quasi-identities."""
    radicals = sample_radical_agreement(b2_c1, b3_c1, samples=10, candidates_per_system=2, seed=3)
    quasi_identities = sample_quasi_identity_agreement(b2_c1, b3_c1, samples=10, seed=3)

    assert radicals.agrees, f"mismatches: {radicals.mismatches}"
    assert radicals.checked == 20
    assert quasi_identities.agrees, f"mismatches: {quasi_identities.mismatches}"
    assert quasi_identities.seed == 3


@pytest.mark.parametrize("algebra_name", ["b2-c1", "fc-point"])
def test_quasi_identities(algebra_name: str) -> None:
    """Test quasi-identities over a finite algebra and over the finite-cofinite one."""
    calg = builtin_algebra(algebra_name)

    holds = evaluate_quasi_identity(parse_quasi_identity("x1 <= c1 -> x1 * ~c1 = 0", calg=calg), calg)
    fails = evaluate_quasi_identity(parse_quasi_identity("x1 <= c1 -> x1 = c1", calg=calg), calg)

    assert holds
    assert not fails
    assert fails.counterexample is not None
    assert format_element(fails.counterexample["x1"]) == "0"


def test_generator_is_determined_by_its_seed() -> None:
    """Test two generators with the same seed draw the same samples without repeats."""
    first = RandomSystemGenerator(constants=["c1"], seed=7)
    second = RandomSystemGenerator(constants=["c1"], seed=7)

    systems = [[format_equation(e) for e in first.system().equations] for _ in range(5)]
    again = [[format_equation(e) for e in second.system().equations] for _ in range(5)]
    assert systems == again
    assert len({"; ".join(s) for s in systems}) == 5

    assert format_quasi_identity(first.quasi_identity()) == format_quasi_identity(second.quasi_identity())
