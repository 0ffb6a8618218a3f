# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for deciding whether two systems have the same solutions."""

from __future__ import annotations

__all__ = [
    "EquivalenceMethod",
    "EquivalenceResult",
    "systems_equivalent",
]

import dataclasses
import enum
import logging
from typing import Dict, List, Optional, Tuple

from boolgeo.algebra import CAlgebra, Element
from boolgeo.common.config import DEFAULT_BLOWUP_LIMIT, DEFAULT_ENUMERATION_BUDGET
from boolgeo.normalizer import CanonicalSystem, canonicalize_merged, x_from_z
from boolgeo.syntax import System, sort_variables

from .consistency import consistency_witness, is_consistent_canonical
from .enumeration import enumerate_solutions, point_key

_logger = logging.getLogger(__name__)


class EquivalenceMethod(enum.Enum):
    """How equivalence is decided."""

    ENUMERATE = "enumerate"
    """Compare the enumerated solution sets, finite algebras only."""

    CANONICAL = "canonical"
    """Compare the merged canonical bounds, any algebra."""

    @staticmethod
    def from_str(value: str) -> EquivalenceMethod:
        """Get the method from its text form."""
        for method in EquivalenceMethod:
            if method.value == value.strip().lower():
                return method
        raise ValueError(f"unknown equivalence method '{value}'")


@dataclasses.dataclass(frozen=True)
class EquivalenceResult:
    """The answer to an equivalence query.

    :ivar equivalent: whether the solution sets are equal.
    :vartype equivalent: bool
    :ivar variables: the common variables of both systems.
    :vartype variables: Tuple[str, ...]
    :ivar witness: for inequivalent systems, an X-space point solving
        exactly one of them.
    :vartype witness: Dict[str, Element] | None
    :ivar solved_by: 1 or 2, the system the witness solves; 0 without witness.
    :vartype solved_by: int
    """

    equivalent: bool
    variables: Tuple[str, ...]
    witness: Optional[Dict[str, Element]] = None
    solved_by: int = 0


def systems_equivalent(
    first: System,
    second: System,
    calg: CAlgebra | None = None,
    method: EquivalenceMethod = EquivalenceMethod.ENUMERATE,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> EquivalenceResult:
    """Decide whether two systems have the same solutions.

    Both systems are taken over the union of their variables. Schematic
    equations are only supported by the canonical method.

    :param first: the first system.
    :param second: the second system.
    :param calg: the C-algebra, defaults to the one bound to the first system.
    :param method: enumeration or canonical bounds.
    :raises UnsupportedAlgebraError: for enumeration over an infinite algebra.
    :raises BudgetExceededError: if enumeration exceeds the budget.
    :raises PreconditionError: for enumeration of a schematic system.
    :raises ReplacementUnavailableError: if a schematic bound has no known infimum.
    """
    logger = logger or _logger
    calg = calg or first.algebra or second.algebra
    assert calg is not None, "equivalence needs a C-algebra"
    variables = sort_variables(set(first.variables) | set(second.variables))
    systems = (first.with_variables(variables), second.with_variables(variables))

    if method == EquivalenceMethod.ENUMERATE:
        result = _by_enumeration(systems, variables, calg, budget, logger)
    else:
        result = _by_canonical_bounds(systems, variables, calg, blowup_limit, logger)
    logger.info(f"systems are {'equivalent' if result.equivalent else 'not equivalent'} ({method.value})")
    return result


def _by_enumeration(
    systems: Tuple[System, System],
    variables: List[str],
    calg: CAlgebra,
    budget: int,
    logger: logging.Logger,
) -> EquivalenceResult:
    solutions = [enumerate_solutions(s, calg, budget=budget, logger=logger) for s in systems]
    keyed = [{point_key(p, variables): p for p in solution} for solution in solutions]
    differing = sorted(set(keyed[0]) ^ set(keyed[1]))
    if not differing:
        return EquivalenceResult(equivalent=True, variables=tuple(variables))
    key = differing[0]
    solved_by = 1 if key in keyed[0] else 2
    return EquivalenceResult(
        equivalent=False,
        variables=tuple(variables),
        witness=keyed[solved_by - 1][key],
        solved_by=solved_by,
    )


def _by_canonical_bounds(
    systems: Tuple[System, System],
    variables: List[str],
    calg: CAlgebra,
    blowup_limit: int,
    logger: logging.Logger,
) -> EquivalenceResult:
    forms: List[CanonicalSystem] = [
        canonicalize_merged(s, calg, blowup_limit=blowup_limit, logger=logger) for s in systems
    ]
    consistent = [is_consistent_canonical(cs) for cs in forms]
    if not any(consistent) or forms[0].same_bounds(forms[1]):
        return EquivalenceResult(equivalent=True, variables=tuple(variables))

    # a solution of one form with a coordinate outside the other's bound
    for index in (0, 1):
        cs, other = forms[index], forms[1 - index]
        if not consistent[index]:
            continue
        for alpha in cs.alphas:
            if consistent[1 - index] and cs.bound(alpha) <= other.bound(alpha):
                continue
            z_point = consistency_witness(cs, first=alpha, logger=logger)
            assert z_point is not None
            return EquivalenceResult(
                equivalent=False,
                variables=tuple(variables),
                witness=x_from_z(z_point, variables, calg.algebra),
                solved_by=index + 1,
            )
    raise AssertionError("canonical forms differ but no distinguishing point was found")
