# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the finite system equivalent to a canonical system.

Once every index tuple has a single bound, the whole (possibly infinite)
system is equivalent to::

    z(α) <= c(α)          for every α
    z(α) * z(β) = 0       for every α before β
    z(0,...,0) + ... + z(1,...,1) = 1

in the Z variables, or to the inequalities ``z_term(α) <= c(α)`` in the X
variables, where the last two groups hold automatically.
"""

from __future__ import annotations

__all__ = [
    "finite_replacement",
    "finite_replacement_x",
]

import functools
import logging
from typing import List, Union

from boolgeo.normalizer import CanonicalSystem, SchematicCanonicalSystem, z_term
from boolgeo.syntax import Equation, Join, Meet, One, Relation, System, Term, Var, Zero

_logger = logging.getLogger(__name__)

AnyCanonical = Union[CanonicalSystem, SchematicCanonicalSystem]


def _resolved(cs: AnyCanonical) -> CanonicalSystem:
    # raises ReplacementUnavailableError when an infimum is unknown
    if isinstance(cs, SchematicCanonicalSystem):
        return cs.to_canonical()
    return cs


def finite_replacement(cs: AnyCanonical, logger: logging.Logger | None = None) -> System:
    """Get the finite Z-space system equivalent to a canonical system.

    :param cs: the canonical system, schematic or not.
    :returns: a system over the Z variables, bound to the same algebra.
    :raises ReplacementUnavailableError: if a schematic bound has no known infimum.
    """
    logger = logger or _logger
    canonical = _resolved(cs)
    calg = canonical.calg
    names = canonical.z_variables

    equations: List[Equation] = [
        Equation(Var(name), calg.express(canonical.bound(alpha)), Relation.LEQ)
        for alpha, name in zip(canonical.alphas, names)
    ]
    for i, first in enumerate(names):
        for second in names[i + 1 :]:
            equations.append(Equation(Meet(Var(first), Var(second)), Zero()))
    zs: List[Term] = [Var(name) for name in names]
    equations.append(Equation(functools.reduce(Join, zs[1:], zs[0]), One()))

    logger.debug(f"finite replacement has {len(equations)} equations in {len(names)} Z variables")
    return System(tuple(names), tuple(equations), algebra=calg)


def finite_replacement_x(
    cs: AnyCanonical,
    drop_trivial: bool = True,
    logger: logging.Logger | None = None,
) -> System:
    """Get the finite X-space system equivalent to a canonical system.

    :param cs: the canonical system, schematic or not.
    :param drop_trivial: leave out the index tuples whose bound is 1.
    :raises ReplacementUnavailableError: if a schematic bound has no known infimum.
    """
    logger = logger or _logger
    canonical = _resolved(cs)
    calg = canonical.calg
    equations: List[Equation] = []
    for alpha in canonical.alphas:
        if drop_trivial and canonical.is_trivial(alpha):
            continue
        lhs: Term = z_term(alpha, canonical.variables) if canonical.n > 0 else One()
        equations.append(Equation(lhs, calg.express(canonical.bound(alpha)), Relation.LEQ))
    logger.debug(f"finite replacement has {len(equations)} inequalities in {canonical.n} X variables")
    return System(canonical.variables, tuple(equations), algebra=calg)
