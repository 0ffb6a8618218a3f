# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for consistency and counting on canonical systems.

A canonical system is consistent iff its bounds join to 1: the point whose
coordinates are the bounds solves everything but the disjointness, and its
splitting solves the rest. On a finite algebra every atom independently
picks the one Z coordinate it belongs to, among those whose bound contains
it, which gives the number of solutions.
"""

from __future__ import annotations

__all__ = [
    "consistency_witness",
    "count_canonical_solutions",
    "count_finite_cofinite_solutions",
    "describe_solutions",
    "is_consistent",
    "is_consistent_canonical",
]

import logging
import math
from typing import Dict, List, Optional, Set

from boolgeo.algebra import (
    CAlgebra,
    Element,
    FiniteBooleanAlgebra,
    FiniteCofiniteAlgebra,
    FiniteCofiniteElement,
    supremum_finite,
)
from boolgeo.common import UnsupportedAlgebraError
from boolgeo.common.config import DEFAULT_BLOWUP_LIMIT
from boolgeo.normalizer import Alpha, CanonicalSystem, canonicalize_merged
from boolgeo.splitting import SplitOrder, bound_point, split_solves
from boolgeo.syntax import System

from .enumeration import SolutionSet

_logger = logging.getLogger(__name__)


def is_consistent_canonical(cs: CanonicalSystem) -> bool:
    """Check if a canonical system has a solution, i.e. its bounds join to 1."""
    return supremum_finite([cs.bound(alpha) for alpha in cs.alphas]).is_one


def is_consistent(
    system: System,
    calg: CAlgebra | None = None,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> bool:
    """Check if a system has a solution, without enumerating.

    :raises ReplacementUnavailableError: if a schematic bound has no known infimum.
    """
    cs = canonicalize_merged(system, calg, blowup_limit=blowup_limit, logger=logger)
    return is_consistent_canonical(cs)


def consistency_witness(
    cs: CanonicalSystem,
    first: Optional[Alpha] = None,
    logger: logging.Logger | None = None,
) -> Optional[Dict[str, Element]]:
    """Get a Z-space solution of a canonical system, ``None`` if it is inconsistent.

    :param cs: the canonical system.
    :param first: the index tuple whose coordinate keeps its whole bound,
        ``(0,...,0)`` by default.
    """
    if not is_consistent_canonical(cs):
        return None
    order = SplitOrder.lexicographic(cs.n) if first is None else SplitOrder.with_first(cs.n, first)
    return split_solves(cs, bound_point(cs), order, logger=logger)


def count_canonical_solutions(cs: CanonicalSystem, logger: logging.Logger | None = None) -> int:
    """Count the solutions of a canonical system over a finite algebra.

    :raises UnsupportedAlgebraError: if the algebra is not finite.
    """
    logger = logger or _logger
    algebra = cs.calg.algebra
    if not isinstance(algebra, FiniteBooleanAlgebra):
        raise UnsupportedAlgebraError(f"counting needs a finite algebra, not {algebra.carrier}")
    choices = [sum(1 for alpha in cs.alphas if atom <= cs.bound(alpha)) for atom in algebra.atoms()]
    logger.debug(f"choices per atom: {choices}")
    return math.prod(choices)


def count_finite_cofinite_solutions(
    cs: CanonicalSystem, logger: logging.Logger | None = None
) -> Optional[int]:
    """Count the solutions of a canonical system over the finite-cofinite algebra.

    A natural lying in two bounds can go to either coordinate. When two
    bounds share a cofinite set there are infinitely many such naturals and
    so infinitely many solutions; otherwise every such natural multiplies
    the count by the number of bounds containing it.

    :returns: the number of solutions, ``None`` when there are infinitely many.
    :raises UnsupportedAlgebraError: if the algebra is not the finite-cofinite one.
    """
    logger = logger or _logger
    if not isinstance(cs.calg.algebra, FiniteCofiniteAlgebra):
        raise UnsupportedAlgebraError(f"expected the finite-cofinite algebra, not {cs.calg.algebra.carrier}")
    if not is_consistent_canonical(cs):
        return 0

    bounds: List[FiniteCofiniteElement] = []
    for alpha in cs.alphas:
        bound = cs.bound(alpha)
        assert isinstance(bound, FiniteCofiniteElement)
        bounds.append(bound)

    shared: Set[int] = set()
    for i, first in enumerate(bounds):
        for second in bounds[i + 1 :]:
            both = first & second
            assert isinstance(both, FiniteCofiniteElement)
            if both.cofinite:
                return None
            shared |= both.members
    logger.debug(f"naturals with a choice of coordinate: {sorted(shared)}")
    return math.prod(sum(1 for b in bounds if b.contains(j)) for j in shared)


def describe_solutions(cs: CanonicalSystem) -> SolutionSet:
    """Get the solution set described by canonical bounds, with its count when known.

    The count is ``None`` for infinitely many solutions or an algebra that
    cannot be counted.
    """
    algebra = cs.calg.algebra
    count: Optional[int] = None
    if isinstance(algebra, FiniteBooleanAlgebra):
        count = count_canonical_solutions(cs)
    elif isinstance(algebra, FiniteCofiniteAlgebra):
        count = count_finite_cofinite_solutions(cs)
    return SolutionSet(variables=cs.variables, canonical=cs, count=count)
