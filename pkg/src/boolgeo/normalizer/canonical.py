# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the canonical form of equations and systems.

An equation ``t = s`` in ``n`` variables is equivalent to the bounds
``z(α) <= c(α)`` together with the constraints that the Z variables are
pairwise disjoint and join to 1. The bound is::

    c(α) = ~(t(α) ^ s(α))

where ``t(α)`` is ``t`` evaluated with ``x_i`` set to 1 when ``α_i = 1``
and to 0 otherwise. The bounds of a system are the meets of the bounds of
its equations; the per-equation bounds are kept as the raw bounds.
"""

from __future__ import annotations

__all__ = [
    "CanonicalSystem",
    "canonicalize_equation",
    "canonicalize_system",
    "equation_bounds",
    "meet_bounds",
    "reduce_to_subsystem",
]

import dataclasses
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from boolgeo.algebra import CAlgebra, Element, format_element, infimum_finite
from boolgeo.common import BlowUpLimitError
from boolgeo.common.config import DEFAULT_BLOWUP_LIMIT
from boolgeo.syntax import Equation, System, evaluate_term, z_name

from .substitution import Alpha, all_tuples

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CanonicalSystem:
    """The canonical form of a system: one bound in C per index tuple.

    The disjointness and cover constraints on the Z variables are implicit.

    :ivar variables: the X variables the system was stated in.
    :vartype variables: Tuple[str, ...]
    :ivar calg: the C-algebra the bounds live in.
    :vartype calg: CAlgebra
    :ivar bounds: the merged bound of each index tuple.
    :vartype bounds: Dict[Alpha, Element]
    :ivar raw_bounds: the per-equation bounds of each index tuple, in
        equation order.
    :vartype raw_bounds: Dict[Alpha, Tuple[Element, ...]]
    """

    variables: Tuple[str, ...]
    calg: CAlgebra
    bounds: Dict[Alpha, Element]
    raw_bounds: Dict[Alpha, Tuple[Element, ...]]

    def __post_init__(self: CanonicalSystem) -> None:
        """Check there is exactly one bound per index tuple."""
        expected = set(all_tuples(self.n))
        assert set(self.bounds) == expected, f"expected {len(expected)} bounds, got {len(self.bounds)}"
        assert set(self.raw_bounds) == expected, "raw bounds do not cover every index tuple"

    @property
    def n(self: CanonicalSystem) -> int:
        """Get the number of X variables."""
        return len(self.variables)

    @property
    def alphas(self: CanonicalSystem) -> List[Alpha]:
        """Get the index tuples in lexicographic order."""
        return all_tuples(self.n)

    @property
    def z_variables(self: CanonicalSystem) -> List[str]:
        """Get the Z variable names in lexicographic order."""
        return [z_name(alpha) for alpha in self.alphas]

    def bound(self: CanonicalSystem, alpha: Alpha) -> Element:
        """Get the merged bound of an index tuple."""
        return self.bounds[tuple(alpha)]

    def is_trivial(self: CanonicalSystem, alpha: Alpha) -> bool:
        """Check if the bound of an index tuple is 1, i.e. it constrains nothing."""
        return self.bounds[tuple(alpha)].is_one

    def bound_lines(self: CanonicalSystem, drop_trivial: bool = False) -> List[Tuple[str, str]]:
        """Get ``(z variable, bound text)`` pairs in lexicographic order."""
        return [
            (z_name(alpha), format_element(self.bounds[alpha]))
            for alpha in self.alphas
            if not (drop_trivial and self.is_trivial(alpha))
        ]

    def same_bounds(self: CanonicalSystem, other: CanonicalSystem) -> bool:
        """Check if two canonical systems have equal merged bounds."""
        return self.variables == other.variables and self.bounds == other.bounds


def equation_bounds(equation: Equation, variables: Sequence[str], calg: CAlgebra) -> Dict[Alpha, Element]:
    """Get the bound of each index tuple for one equation."""
    desugared = equation.desugar()
    zero = calg.algebra.zero()
    one = calg.algebra.one()
    bounds: Dict[Alpha, Element] = {}
    for alpha in all_tuples(len(variables)):
        point = {v: (one if a == 1 else zero) for a, v in zip(alpha, variables)}
        lhs = evaluate_term(desugared.lhs, point, calg)
        rhs = evaluate_term(desugared.rhs, point, calg)
        bounds[alpha] = ~(lhs ^ rhs)
    return bounds


def _check_blowup(n: int, blowup_limit: int) -> None:
    if n > blowup_limit:
        raise BlowUpLimitError(f"{n} variables need 2**{n} Z variables, the blow-up limit is {blowup_limit}")


def canonicalize_equation(
    equation: Equation,
    variables: Sequence[str],
    calg: CAlgebra,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
) -> CanonicalSystem:
    """Get the canonical form of a single equation.

    :param equation: the equation, over ``variables``.
    :param variables: the X variables, in order.
    :param calg: the C-algebra.
    :param blowup_limit: the largest accepted number of variables.
    :raises BlowUpLimitError: if there are too many variables.
    """
    return canonicalize_system(System(tuple(variables), (equation,)), calg, blowup_limit=blowup_limit)


def canonicalize_system(
    system: System,
    calg: CAlgebra | None = None,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> CanonicalSystem:
    """Get the canonical form of a finite system.

    The bound of each index tuple is the meet of the bounds the equations
    give it, 1 for the empty system.

    :param system: the system; its schematic part, if any, is ignored.
    :param calg: the C-algebra, defaults to the one bound to the system.
    :param blowup_limit: the largest accepted number of variables.
    :raises BlowUpLimitError: if there are too many variables.
    """
    logger = logger or _logger
    calg = calg or system.algebra
    assert calg is not None, "canonicalisation needs a C-algebra"
    _check_blowup(len(system.variables), blowup_limit)

    per_equation = [equation_bounds(eq, system.variables, calg) for eq in system.equations]
    raw: Dict[Alpha, Tuple[Element, ...]] = {}
    merged: Dict[Alpha, Element] = {}
    for alpha in all_tuples(len(system.variables)):
        raw[alpha] = tuple(bounds[alpha] for bounds in per_equation)
        merged[alpha] = meet_bounds(raw[alpha], calg)
        logger.debug(f"{z_name(alpha)} <= {format_element(merged[alpha])} from {len(raw[alpha])} bounds")
    return CanonicalSystem(variables=tuple(system.variables), calg=calg, bounds=merged, raw_bounds=raw)


def reduce_to_subsystem(
    system: System,
    calg: CAlgebra | None = None,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> System:
    """Get a subsystem with the same merged bounds.

    Equations are dropped greedily, first to last, whenever the remaining
    ones still give the same bounds; the result is equivalent to the system
    over every C-algebra with the same constants.
    """
    logger = logger or _logger
    calg = calg or system.algebra
    assert calg is not None, "reduction needs a C-algebra"
    target = canonicalize_system(system, calg, blowup_limit=blowup_limit, logger=logger)

    kept: List[Equation] = list(system.equations)
    index = 0
    while index < len(kept):
        candidate = system.with_equations(kept[:index] + kept[index + 1 :])
        if canonicalize_system(candidate, calg, blowup_limit=blowup_limit, logger=logger).same_bounds(target):
            kept.pop(index)
        else:
            index += 1
    logger.info(f"reduced {len(system.equations)} equations to an equivalent subsystem of {len(kept)}")
    return system.with_equations(kept)


def meet_bounds(bounds: Iterable[Element], calg: CAlgebra) -> Element:
    """Get the meet of a collection of bounds, 1 when it is empty."""
    items = list(bounds)
    return infimum_finite(items) if items else calg.algebra.one()
