# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for evaluating terms and equations at a point.

A point is a mapping from variable names to elements of the algebra. Both
X-space points (``x1``, ``x2``, ...) and Z-space points (``z(0,1)``, ...)
are plain mappings.
"""

from __future__ import annotations

__all__ = [
    "Point",
    "evaluate_term",
    "satisfies",
    "satisfies_all",
]

from typing import Iterable, Mapping

from boolgeo.algebra import CAlgebra, Element
from boolgeo.common import UnassignedVariableError

from .terms import Const, Equation, Join, Meet, Not, One, Term, Var, Zero

Point = Mapping[str, Element]
"""An assignment of elements to variable names."""


def evaluate_term(term: Term, point: Point, calg: CAlgebra) -> Element:
    """Evaluate a term structurally with the algebra operations.

    :param term: the term.
    :param point: the values of the variables of ``term``.
    :param calg: the C-algebra resolving the constants.
    :raises UnassignedVariableError: if the point misses a variable of the term.
    """
    if isinstance(term, Var):
        if term.name not in point:
            raise UnassignedVariableError(f"variable '{term.name}' is not assigned by the point")
        value = point[term.name]
        calg.algebra.check_owns(value)
        return value
    if isinstance(term, Const):
        return calg.resolve(term.name)
    if isinstance(term, Zero):
        return calg.algebra.zero()
    if isinstance(term, One):
        return calg.algebra.one()
    if isinstance(term, Not):
        return ~evaluate_term(term.operand, point, calg)
    if isinstance(term, Join):
        return evaluate_term(term.left, point, calg) | evaluate_term(term.right, point, calg)
    assert isinstance(term, Meet), f"unexpected term node {type(term).__name__}"
    return evaluate_term(term.left, point, calg) & evaluate_term(term.right, point, calg)


def satisfies(point: Point, equation: Equation, calg: CAlgebra) -> bool:
    """Check if a point satisfies an equation, ``<=`` read as ``t * s = t``."""
    desugared = equation.desugar()
    return evaluate_term(desugared.lhs, point, calg) == evaluate_term(desugared.rhs, point, calg)


def satisfies_all(point: Point, equations: Iterable[Equation], calg: CAlgebra) -> bool:
    """Check if a point satisfies every equation."""
    return all(satisfies(point, eq, calg) for eq in equations)
