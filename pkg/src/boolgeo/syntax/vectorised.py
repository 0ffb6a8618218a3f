# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for evaluating terms over many points of a finite algebra at once.

Elements of a finite algebra are atom bitmasks, so a batch of points is a
column of codes per variable and every operation is a numpy bitwise
operation on whole columns.
"""

from __future__ import annotations

__all__ = [
    "CodeArray",
    "MaskArray",
    "evaluate_term_codes",
    "satisfied_mask",
]

from typing import Any, Iterable, Mapping

import nptyping as npt
import numpy as np

from boolgeo.algebra import CAlgebra, FiniteBooleanAlgebra, FiniteElement
from boolgeo.common import UnassignedVariableError, UnsupportedAlgebraError

from .terms import Const, Equation, Join, Meet, Not, One, Term, Var, Zero

CodeArray = npt.NDArray[Any, npt.UInt64]
"""A column of element codes."""

MaskArray = npt.NDArray[Any, npt.Bool]
"""A column of booleans, one per point."""


def _finite_algebra(calg: CAlgebra) -> FiniteBooleanAlgebra:
    if not isinstance(calg.algebra, FiniteBooleanAlgebra):
        carrier = calg.algebra.carrier
        raise UnsupportedAlgebraError(f"vectorised evaluation needs a finite algebra, not {carrier}")
    return calg.algebra


def evaluate_term_codes(term: Term, columns: Mapping[str, CodeArray], calg: CAlgebra) -> CodeArray:
    """Evaluate a term at every point of a batch.

    :param term: the term.
    :param columns: for each variable, the codes of its value at each point;
        all columns have the same length.
    :param calg: a C-algebra over a finite algebra.
    :returns: the codes of the term's value at each point.
    :raises UnassignedVariableError: if a variable has no column.
    """
    algebra = _finite_algebra(calg)
    length = len(next(iter(columns.values()))) if columns else 1
    mask = np.uint64(algebra.mask)

    def _evaluate(node: Term) -> CodeArray:
        if isinstance(node, Var):
            if node.name not in columns:
                raise UnassignedVariableError(f"variable '{node.name}' is not assigned by the points")
            return columns[node.name]
        if isinstance(node, Const):
            value = calg.resolve(node.name)
            assert isinstance(value, FiniteElement)
            return np.full(length, value.code, dtype=np.uint64)
        if isinstance(node, Zero):
            return np.zeros(length, dtype=np.uint64)
        if isinstance(node, One):
            return np.full(length, algebra.mask, dtype=np.uint64)
        if isinstance(node, Not):
            return np.bitwise_xor(_evaluate(node.operand), mask)
        if isinstance(node, Join):
            return np.bitwise_or(_evaluate(node.left), _evaluate(node.right))
        assert isinstance(node, Meet), f"unexpected term node {type(node).__name__}"
        return np.bitwise_and(_evaluate(node.left), _evaluate(node.right))

    return _evaluate(term)


def satisfied_mask(
    equations: Iterable[Equation],
    columns: Mapping[str, CodeArray],
    calg: CAlgebra,
) -> MaskArray:
    """Get which points of a batch satisfy every equation."""
    length = len(next(iter(columns.values()))) if columns else 1
    result = np.ones(length, dtype=bool)
    for equation in equations:
        desugared = equation.desugar()
        lhs = evaluate_term_codes(desugared.lhs, columns, calg)
        rhs = evaluate_term_codes(desugared.rhs, columns, calg)
        result &= lhs == rhs
    return result
