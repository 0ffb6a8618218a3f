# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""This module contains the pytest tests for solving, radicals, equivalence and finite replacements."""

from __future__ import annotations

from typing import Dict, List

import pytest
from pytest_mock import MockerFixture

import boolgeo.solver.enumeration as enumeration_module
from boolgeo.algebra import CAlgebra, Element, format_element
from boolgeo.common import (
    BudgetExceededError,
    PreconditionError,
    ReplacementUnavailableError,
    UnsupportedAlgebraError,
)
from boolgeo.normalizer import canonicalize_schematic, canonicalize_system, x_from_z
from boolgeo.solver import (
    EquivalenceMethod,
    RadicalKind,
    consistency_witness,
    count_canonical_solutions,
    count_finite_cofinite_solutions,
    describe_solutions,
    enumerate_solutions,
    finite_replacement,
    finite_replacement_x,
    is_consistent,
    radical_member,
    radical_member_by_enumeration,
    radical_member_canonical,
    systems_equivalent,
)
from boolgeo.syntax import System, format_equation, parse_equation, parse_system


def _system(calg: CAlgebra, *equations: str, variables: str = "x1") -> System:
    return parse_system("\n".join([f"vars {variables}", *equations]) + "\n", calg=calg)


def _formatted(point: Dict[str, Element] | None) -> Dict[str, str]:
    assert point is not None, "expected a point"
    return {name: format_element(value) for name, value in point.items()}


def test_enumeration_lists_solutions_in_lexicographic_order(b2_c1: CAlgebra) -> None:
    """Test the solutions of ``x1 <= c1`` over two atoms."""
    solutions = enumerate_solutions(_system(b2_c1, "x1 <= c1"))

    assert solutions.count == 2
    assert [_formatted(p) for p in solutions] == [{"x1": "0"}, {"x1": "{0}"}]
    assert solutions.keys() == sorted(solutions.keys())


def test_enumeration_does_not_depend_on_the_chunk_size(b3_c1: CAlgebra) -> None:
    """Test batching the points gives the same solutions in the same order."""
    system = _system(b3_c1, "x1 * x2 <= c1", "x3 + x1 = 1", variables="x1 x2 x3")

    whole = enumerate_solutions(system)
    chunked = enumerate_solutions(system, chunk_size=7)

    assert whole.count == chunked.count == count_canonical_solutions(canonicalize_system(system))
    assert whole.keys() == chunked.keys()


def test_enumeration_of_the_empty_system(b2_c1: CAlgebra) -> None:
    """Test every point solves a system without equations."""
    solutions = enumerate_solutions(_system(b2_c1, variables="x1 x2"))

    assert solutions.count == 16


def test_enumeration_budget(b2_c1: CAlgebra) -> None:
    """Test enumeration refuses more points than the budget."""
    with pytest.raises(BudgetExceededError) as excinfo:
        enumerate_solutions(_system(b2_c1, "x1 = x2", variables="x1 x2"), budget=8)

    assert "4**2 = 16 points exceed the budget 8" in str(excinfo.value)


def test_enumeration_needs_a_finite_algebra(fc_point: CAlgebra) -> None:
    """Test the finite-cofinite algebra cannot be enumerated."""
    with pytest.raises(UnsupportedAlgebraError):
        enumerate_solutions(_system(fc_point, "x1 <= c1"))


def test_enumeration_of_a_schematic_system(fc_chain: CAlgebra, b2_c1: CAlgebra) -> None:
    """Test schematic systems are never enumerated."""
    system = _system(fc_chain, "each n=1.. : c{n} <= x1").with_algebra(b2_c1)

    with pytest.raises(PreconditionError):
        enumerate_solutions(system)


@pytest.mark.parametrize(
    "equations, count, consistent",
    [
        (["x1 <= c1"], 2, True),
        (["x1 = c1"], 1, True),
        (["0 = c1"], 0, False),
        (["x1 <= c1", "x1 >= c1"], 1, True),
        ([], 4, True),
    ],
)
def test_count_and_consistency(b2_c1: CAlgebra, equations: List[str], count: int, consistent: bool) -> None:
    """Test the canonical count and consistency agree with enumeration."""
    system = _system(b2_c1, *equations)
    cs = canonicalize_system(system)

    assert count_canonical_solutions(cs) == count
    assert enumerate_solutions(system).count == count
    assert is_consistent(system) == consistent
    assert (consistency_witness(cs) is not None) == consistent


def test_consistency_never_enumerates(b3_c1: CAlgebra, mocker: MockerFixture) -> None:
    """Test the consistency check only looks at the canonical bounds."""
    spy = mocker.spy(enumeration_module, "satisfied_mask")
    system = _system(b3_c1, "x1 * x2 <= c1", "x3 = ~x1", variables="x1 x2 x3")

    assert is_consistent(system)
    assert spy.call_count == 0

    enumerate_solutions(system)
    assert spy.call_count > 0


def test_consistency_witness_solves_the_system(b2_c1: CAlgebra) -> None:
    """Test the witness of a consistent system maps to an X-space solution."""
    system = _system(b2_c1, "x1 = c1")
    cs = canonicalize_system(system)

    witness = consistency_witness(cs)

    assert _formatted(witness) == {"z(0)": "{1}", "z(1)": "{0}"}
    assert witness is not None
    assert _formatted(x_from_z(witness, ["x1"], b2_c1.algebra)) == {"x1": "{0}"}


def test_finite_cofinite_counts(fc_point: CAlgebra) -> None:
    """Test counting over the finite-cofinite algebra, finite and infinite."""
    finite = canonicalize_system(_system(fc_point, "x1 <= c1"))
    infinite = canonicalize_system(_system(fc_point, "c1 <= x1"))
    inconsistent = canonicalize_system(_system(fc_point, "c1 = 0"))

    assert count_finite_cofinite_solutions(finite) == 2
    assert count_finite_cofinite_solutions(infinite) is None
    assert count_finite_cofinite_solutions(inconsistent) == 0

    example = consistency_witness(infinite)
    assert example is not None
    assert _formatted(x_from_z(example, ["x1"], fc_point.algebra)) == {"x1": "{0}"}


def test_describe_solutions(b2_c1: CAlgebra, fc_point: CAlgebra) -> None:
    """Test the symbolic solution set carries its count."""
    finite = describe_solutions(canonicalize_system(_system(b2_c1, "x1 <= c1")))
    infinite = describe_solutions(canonicalize_system(_system(fc_point, "c1 <= x1")))

    assert not finite.is_explicit and finite.count == 2
    assert infinite.count is None and not infinite.is_empty

    with pytest.raises(UnsupportedAlgebraError):
        count_canonical_solutions(canonicalize_system(_system(fc_point, "x1 <= c1")))


def test_radical_nonmember_has_a_witness(b2_c1: CAlgebra) -> None:
    """Test ``x1 = 0`` is not in the radical of ``x1 <= c1``."""
    system = _system(b2_c1, "x1 <= c1")
    candidate = parse_equation("x1 = 0", calg=b2_c1)

    verdict = radical_member(system, candidate)
    by_enumeration = radical_member_by_enumeration(system, candidate)

    assert verdict.kind == RadicalKind.NONMEMBER
    assert verdict.failing == "z(1) <= 0"
    assert _formatted(verdict.witness) == {"x1": "{0}"}
    assert by_enumeration.kind == RadicalKind.NONMEMBER
    assert _formatted(by_enumeration.witness) == {"x1": "{0}"}


def test_radical_member(b2_c1: CAlgebra) -> None:
    """Test ``x1 * ~c1 = 0`` is in the radical of ``x1 <= c1``."""
    system = _system(b2_c1, "x1 <= c1")
    candidate = parse_equation("x1 * ~c1 = 0", calg=b2_c1)

    assert radical_member(system, candidate).kind == RadicalKind.MEMBER
    assert radical_member_by_enumeration(system, candidate).kind == RadicalKind.MEMBER


def test_radical_of_an_inconsistent_system_is_full(b2_c1: CAlgebra) -> None:
    """Test every equation is in the radical of an inconsistent system."""
    system = _system(b2_c1, "0 = c1")
    candidate = parse_equation("x1 = 1")

    verdict = radical_member(system, candidate)

    assert verdict.kind == RadicalKind.FULL
    assert verdict.is_member
    assert radical_member_by_enumeration(system, candidate).kind == RadicalKind.FULL


def test_radical_with_candidate_variables_outside_the_system(b2_c1: CAlgebra) -> None:
    """Test a candidate variable the system does not declare is unconstrained."""
    system = _system(b2_c1, "x1 <= c1")

    member = radical_member(system, parse_equation("x1 * x2 <= c1"))
    nonmember = radical_member(system, parse_equation("x2 = 0"))

    assert member.kind == RadicalKind.MEMBER
    assert nonmember.kind == RadicalKind.NONMEMBER
    assert nonmember.failing == "z(0,1) <= 0"
    assert _formatted(nonmember.witness) == {"x1": "0", "x2": "1"}

def test_radical_of_a_schematic_system(fc_chain: CAlgebra) -> None:
    """Test the schematic equations of a system constrain its radical."""
    system = _system(fc_chain, "each n=1.. : c{n} <= x1")

    member = radical_member(system, parse_equation("x1 = 1", calg=fc_chain))
    nonmember = radical_member(system, parse_equation("x1 = 0", calg=fc_chain))

    assert member.kind == RadicalKind.MEMBER
    assert nonmember.kind == RadicalKind.NONMEMBER
    assert nonmember.failing == "z(1) <= 0"
    assert _formatted(nonmember.witness) == {"x1": "1"}


def test_radical_of_a_schematic_system_without_infimum(fc_parity: CAlgebra) -> None:
    """Test a schematic system whose bounds have no infimum is not judged on its fixed part."""
    system = _system(fc_parity, "each n=1.. : ceven{n} <= x1", "each n=1.. : x1 <= ~codd{n}")

    with pytest.raises(ReplacementUnavailableError):
        radical_member(system, parse_equation("x1 = 1", calg=fc_parity))
    with pytest.raises(ReplacementUnavailableError):
        is_consistent(system)



def test_radical_canonical_component(b2_c1: CAlgebra) -> None:
    """Test the witness of a canonical component keeps its whole bound."""
    cs = canonicalize_system(_system(b2_c1, "x1 <= c1"))
    b2 = b2_c1.algebra

    verdict = radical_member_canonical(cs, (0,), b2.zero())

    assert verdict.failing == "z(0) <= 0"
    assert _formatted(verdict.witness) == {"z(0)": "1", "z(1)": "0"}
    assert radical_member_canonical(cs, (1,), b2_c1.resolve("c1")).is_member


@pytest.mark.parametrize("method", list(EquivalenceMethod))
def test_equivalent_systems(b2_c1: CAlgebra, method: EquivalenceMethod) -> None:
    """Test systems with the same solutions are equivalent by both methods."""
    result = systems_equivalent(_system(b2_c1, "x1 <= c1"), _system(b2_c1, "x1 * ~c1 = 0"), method=method)

    assert result.equivalent
    assert result.witness is None and result.solved_by == 0


@pytest.mark.parametrize("method", list(EquivalenceMethod))
def test_inequivalent_systems(b2_c1: CAlgebra, method: EquivalenceMethod) -> None:
    """Test the witness solves exactly one of two inequivalent systems."""
    result = systems_equivalent(_system(b2_c1, "x1 <= c1"), _system(b2_c1, "x1 = c1"), method=method)

    assert not result.equivalent
    assert _formatted(result.witness) == {"x1": "0"}
    assert result.solved_by == 1


def test_equivalence_over_the_union_of_variables(b2_c1: CAlgebra) -> None:
    """Test a system is compared with another over both variable lists."""
    first = _system(b2_c1, "x1 <= c1")
    second = _system(b2_c1, "x1 <= c1", "x2 = 1", variables="x1 x2")

    result = systems_equivalent(first, second)

    assert not result.equivalent
    assert result.variables == ("x1", "x2")
    assert _formatted(result.witness) == {"x1": "0", "x2": "0"}
    assert result.solved_by == 1


def test_canonical_equivalence_over_an_infinite_algebra(fc_point: CAlgebra) -> None:
    """Test the canonical method decides equivalence where enumeration cannot."""
    first = _system(fc_point, "c1 <= x1")
    second = _system(fc_point, "~x1 <= ~c1")

    assert systems_equivalent(first, second, method=EquivalenceMethod.CANONICAL).equivalent
    with pytest.raises(UnsupportedAlgebraError):
        systems_equivalent(first, second, method=EquivalenceMethod.ENUMERATE)
    assert EquivalenceMethod.from_str(" Canonical ") == EquivalenceMethod.CANONICAL

def test_canonical_equivalence_of_schematic_systems(fc_chain: CAlgebra) -> None:
    """Test schematic equations count through the infima of their bounds."""
    chain = _system(fc_chain, "each n=1.. : c{n} <= x1")

    same = systems_equivalent(chain, _system(fc_chain, "x1 = 1"), method=EquivalenceMethod.CANONICAL)
    weaker = systems_equivalent(chain, _system(fc_chain, "c1 <= x1"), method=EquivalenceMethod.CANONICAL)

    assert same.equivalent
    assert not weaker.equivalent
    assert _formatted(weaker.witness) == {"x1": "{0}"}
    assert weaker.solved_by == 2



def test_finite_replacement_in_x(b2_c1: CAlgebra) -> None:
    """Test the X-space replacement lists one inequality per index tuple."""
    cs = canonicalize_system(_system(b2_c1, "x1 <= c1"))

    full = finite_replacement_x(cs, drop_trivial=False)
    dropped = finite_replacement_x(cs)

    assert [format_equation(eq) for eq in full] == ["~x1 <= 1", "x1 <= c1"]
    assert [format_equation(eq) for eq in dropped] == ["x1 <= c1"]
    assert systems_equivalent(full, _system(b2_c1, "x1 <= c1")).equivalent


def test_finite_replacement_in_z(b2_c1: CAlgebra) -> None:
    """Test the Z-space replacement has the bounds, disjointness and cover."""
    cs = canonicalize_system(_system(b2_c1, "x1 <= c1"))

    replacement = finite_replacement(cs)

    assert replacement.variables == ("z(0)", "z(1)")
    assert [format_equation(eq) for eq in replacement] == [
        "z(0) <= 1",
        "z(1) <= c1",
        "z(0) * z(1) = 0",
        "z(0) + z(1) = 1",
    ]
    assert enumerate_solutions(replacement).count == 2


def test_finite_replacement_of_a_schematic_system(fc_chain: CAlgebra, fc_parity: CAlgebra) -> None:
    """Test an infinite system with known infima has a finite replacement, and one without has none."""
    chain = canonicalize_schematic(_system(fc_chain, "each n=1.. : c{n} <= x1"))
    parity = canonicalize_schematic(_system(fc_parity, "each n=1.. : ceven{n} <= x1"))

    replacement = finite_replacement_x(chain, drop_trivial=False)

    assert [format_equation(eq) for eq in replacement] == ["~x1 <= 0", "x1 <= 1"]
    with pytest.raises(ReplacementUnavailableError):
        finite_replacement_x(parity)
