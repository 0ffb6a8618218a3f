# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""
Module for asserting the closed-form procedures against definitional oracles.

Each assertion recomputes a result from the definitions, by exhaustive
enumeration over a finite algebra, and compares it with what the canonical
form gives. The corpus variants collect the failures of every input and
report them together.
"""

from __future__ import annotations

__all__ = [
    "assert_agreement",
    "assert_certificate_passed",
    "assert_consistency_rule",
    "assert_corpus",
    "assert_enumeration_matches_canonical",
    "assert_radical_agrees",
    "assert_split_properties",
]

from typing import Iterable, List, Mapping

from boolgeo.algebra import CAlgebra, Element
from boolgeo.classifier import AgreementReport, EkCertificate
from boolgeo.common.config import DEFAULT_ENUMERATION_BUDGET
from boolgeo.normalizer import canonicalize_system, x_from_z
from boolgeo.solver import (
    RadicalKind,
    count_canonical_solutions,
    enumerate_solutions,
    finite_replacement,
    is_consistent,
    point_key,
    radical_member,
    radical_member_by_enumeration,
)
from boolgeo.splitting import SplitOrder, split, splitting_violations
from boolgeo.syntax import Equation, System, format_equation, satisfies, satisfies_all


def _describe(system: System) -> str:
    return "; ".join(format_equation(e) for e in system.equations) or "<empty>"


def assert_enumeration_matches_canonical(
    system: System,
    calg: CAlgebra,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> None:
    """Assert the solutions of a system are the X images of the solutions of its canonical form.

    The canonical solutions are enumerated from the finite Z-space
    replacement, so neither side relies on splitting.

    :param system: a finite system.
    :param calg: a C-algebra over a finite algebra.
    :param budget: the enumeration budget of each side.
    """
    variables = list(system.variables)
    direct = set(enumerate_solutions(system, calg, budget=budget).keys())

    cs = canonicalize_system(system, calg)
    z_solutions = enumerate_solutions(finite_replacement(cs), calg, budget=budget)
    images = {point_key(x_from_z(z, variables, calg.algebra), variables) for z in z_solutions}
    assert direct == images, (
        f"Expected the solutions of {_describe(system)} to be the images of its canonical solutions. "
        f"{len(direct - images)} only found directly, {len(images - direct)} only through the canonical form"
    )

    count = count_canonical_solutions(cs)
    assert count == len(direct), f"Expected {len(direct)} solutions of {_describe(system)}, counted {count}"


def assert_consistency_rule(
    system: System,
    calg: CAlgebra,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> None:
    """Assert the join-of-bounds consistency rule agrees with enumeration."""
    consistent = is_consistent(system, calg)
    has_solutions = not enumerate_solutions(system, calg, budget=budget).is_empty
    assert consistent == has_solutions, (
        f"Expected {_describe(system)} to be {'consistent' if has_solutions else 'inconsistent'}, "
        f"the canonical rule says {'consistent' if consistent else 'inconsistent'}"
    )


def assert_radical_agrees(
    system: System,
    candidate: Equation,
    calg: CAlgebra,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> None:
    """Assert radical membership by canonical bounds agrees with the definition.

    A nonmember witness must solve the system and violate the candidate.
    """
    verdict = radical_member(system, candidate, calg)
    expected = radical_member_by_enumeration(system, candidate, calg, budget=budget)
    assert verdict.kind == expected.kind, (
        f"Expected {format_equation(candidate)} to be {expected.kind.value} for {_describe(system)}, "
        f"got {verdict.kind.value}"
    )
    if verdict.kind == RadicalKind.NONMEMBER:
        witness = verdict.witness
        assert witness is not None
        assert satisfies_all(witness, system.equations, calg), "Expected the witness to solve the system"
        assert not satisfies(witness, candidate, calg), "Expected the witness to violate the candidate"


def assert_split_properties(p: Mapping[str, Element], order: SplitOrder) -> None:
    """Assert the splitting of a point has every splitting property."""
    q = split(p, order)
    violations = splitting_violations(p, q, order)
    assert len(violations) == 0, f"Expected no violations splitting in order {order.describe()}: {violations}"


def assert_certificate_passed(certificate: EkCertificate) -> None:
    """Assert an E_k certificate passed."""
    failures = list(certificate.failures)
    assert certificate.passed, f"Expected certificate of {certificate.name} to pass. Failures = {failures}"


def assert_agreement(report: AgreementReport) -> None:
    """Assert a sampling report found no mismatches."""
    assert report.agrees, (
        f"Expected no mismatches among {report.checked} samples with seed {report.seed}. "
        f"First mismatches = {list(report.mismatches[:5])}"
    )


def assert_corpus(
    systems: Iterable[System],
    calg: CAlgebra,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Assert the enumeration and consistency oracles over a whole corpus.

    :returns: the number of systems checked.
    """
    errors: List[str] = []
    checked = 0
    for system in systems:
        checked += 1
        try:
            assert_enumeration_matches_canonical(system, calg, budget=budget)
            assert_consistency_rule(system, calg, budget=budget)
        except AssertionError as e:
            errors.append(str(e))

    assert len(errors) == 0, f"Expected no errors over {checked} systems. Error messages = {errors[:10]}"
    return checked
