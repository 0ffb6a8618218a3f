# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for deciding membership of an equation in the radical of a system.

The radical of a system is the set of equations every solution satisfies.
For a consistent canonical system with bounds ``c(α)`` the inequality
``z(γ) <= c`` is in the radical iff ``c(γ) <= c``; otherwise splitting the
bound point with ``γ`` first gives a solution whose ``γ`` coordinate is
``c(γ)`` itself. An arbitrary equation is decomposed into one such
inequality per index tuple.
"""

from __future__ import annotations

__all__ = [
    "RadicalKind",
    "RadicalVerdict",
    "radical_member",
    "radical_member_by_enumeration",
    "radical_member_canonical",
]

import dataclasses
import enum
import logging
from typing import Dict, List, Optional

from boolgeo.algebra import CAlgebra, Element, format_element
from boolgeo.common.config import DEFAULT_BLOWUP_LIMIT, DEFAULT_ENUMERATION_BUDGET, DEFAULT_TERM_DEPTH_BOUND
from boolgeo.normalizer import Alpha, CanonicalSystem, canonicalize_merged, equation_bounds, x_from_z
from boolgeo.splitting import SplitOrder, bound_point, split
from boolgeo.syntax import Equation, System, format_equation, satisfies, satisfies_all, sort_variables, z_name

from .consistency import is_consistent_canonical
from .enumeration import enumerate_solutions

_logger = logging.getLogger(__name__)


class RadicalKind(enum.Enum):
    """An enumeration of the answers to a radical membership query."""

    MEMBER = "member"
    NONMEMBER = "nonmember"
    FULL = "full"
    """The system is inconsistent, so its radical holds every equation."""


@dataclasses.dataclass(frozen=True)
class RadicalVerdict:
    """The answer to a radical membership query.

    :ivar kind: member, nonmember or full radical.
    :vartype kind: RadicalKind
    :ivar witness: for a nonmember, a solution of the system that violates
        the candidate. Z-space for canonical queries, X-space otherwise.
    :vartype witness: Dict[str, Element] | None
    :ivar failing: for a nonmember, the violated component ``z(γ) <= c``.
    :vartype failing: str | None
    """

    kind: RadicalKind
    witness: Optional[Dict[str, Element]] = None
    failing: Optional[str] = None

    def __post_init__(self: RadicalVerdict) -> None:
        """Check a witness is present exactly for a nonmember."""
        assert (self.kind == RadicalKind.NONMEMBER) == (self.witness is not None), "witness mismatch"

    @property
    def is_member(self: RadicalVerdict) -> bool:
        """Check if the candidate belongs to the radical."""
        return self.kind != RadicalKind.NONMEMBER


def radical_member_canonical(
    cs: CanonicalSystem,
    gamma: Alpha,
    c: Element,
    logger: logging.Logger | None = None,
) -> RadicalVerdict:
    """Decide whether ``z(gamma) <= c`` is in the radical of a canonical system.

    :param cs: the canonical system.
    :param gamma: the index tuple of the candidate.
    :param c: the bound of the candidate.
    :returns: a full verdict for an inconsistent system, otherwise member or
        nonmember with a Z-space witness.
    """
    logger = logger or _logger
    if not is_consistent_canonical(cs):
        return RadicalVerdict(kind=RadicalKind.FULL)
    bound = cs.bound(gamma)
    if bound <= c:
        return RadicalVerdict(kind=RadicalKind.MEMBER)

    witness = split(bound_point(cs), SplitOrder.with_first(cs.n, gamma), logger=logger)
    failing = f"{z_name(gamma)} <= {format_element(c)}"
    assert witness[z_name(gamma)] == bound, "the first coordinate of a split point must be kept"
    logger.debug(f"{failing} fails, {z_name(gamma)} can be {format_element(bound)}")
    return RadicalVerdict(kind=RadicalKind.NONMEMBER, witness=witness, failing=failing)


def _extended_variables(system: System, candidate: Equation) -> List[str]:
    extra = sort_variables(candidate.variables() - set(system.variables))
    return list(system.variables) + extra


def radical_member(
    system: System,
    candidate: Equation,
    calg: CAlgebra | None = None,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> RadicalVerdict:
    """Decide whether an equation is in the radical of a system.

    Variables of the candidate that the system does not declare are added
    after the declared ones; they are unconstrained by the system. The
    schematic equations of a system count through the infima of their bounds.

    :param system: the system.
    :param candidate: the equation.
    :param calg: the C-algebra, defaults to the one bound to the system.
    :param blowup_limit: the largest accepted number of variables.
    :raises BlowUpLimitError: if there are too many variables.
    :raises ReplacementUnavailableError: if a schematic bound has no known infimum.
    """
    logger = logger or _logger
    calg = calg or system.algebra
    assert calg is not None, "radical membership needs a C-algebra"
    variables = _extended_variables(system, candidate)
    extended = system.with_variables(variables)
    cs = canonicalize_merged(extended, calg, blowup_limit=blowup_limit, logger=logger)
    if not is_consistent_canonical(cs):
        logger.info("system is inconsistent, its radical holds every equation")
        return RadicalVerdict(kind=RadicalKind.FULL)

    candidate_bounds = equation_bounds(candidate, variables, calg)
    for alpha in cs.alphas:
        verdict = radical_member_canonical(cs, alpha, candidate_bounds[alpha], logger=logger)
        if verdict.kind == RadicalKind.NONMEMBER:
            assert verdict.witness is not None
            witness = x_from_z(verdict.witness, variables, calg.algebra)
            solved = extended.prefix(DEFAULT_TERM_DEPTH_BOUND).equations
            assert satisfies_all(witness, solved, calg), "witness does not solve the system"
            assert not satisfies(witness, candidate, calg), "witness satisfies the candidate"
            logger.info(f"{format_equation(candidate)} is not in the radical: {verdict.failing}")
            return RadicalVerdict(kind=RadicalKind.NONMEMBER, witness=witness, failing=verdict.failing)
    return RadicalVerdict(kind=RadicalKind.MEMBER)


def radical_member_by_enumeration(
    system: System,
    candidate: Equation,
    calg: CAlgebra | None = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    logger: logging.Logger | None = None,
) -> RadicalVerdict:
    """Decide radical membership from the definition, by enumerating every solution.

    The witness of a nonmember is the least solution violating the candidate.

    :raises UnsupportedAlgebraError: if the algebra is not finite.
    :raises BudgetExceededError: if the enumeration exceeds the budget.
    """
    calg = calg or system.algebra
    assert calg is not None, "radical membership needs a C-algebra"
    extended = system.with_variables(_extended_variables(system, candidate))
    solutions = enumerate_solutions(extended, calg, budget=budget, logger=logger)
    if solutions.is_empty:
        return RadicalVerdict(kind=RadicalKind.FULL)
    for point in solutions:
        if not satisfies(point, candidate, calg):
            failing = format_equation(candidate)
            return RadicalVerdict(kind=RadicalKind.NONMEMBER, witness=point, failing=failing)
    return RadicalVerdict(kind=RadicalKind.MEMBER)
