# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for printing terms, equations and systems in the parser's syntax."""

from __future__ import annotations

__all__ = [
    "format_equation",
    "format_system",
    "format_term",
]

from typing import List

from .terms import Const, Equation, Join, Meet, Not, One, Relation, System, Term, Var, Zero

_JOIN_PRECEDENCE = 1
_MEET_PRECEDENCE = 2
_NOT_PRECEDENCE = 3
_ATOM_PRECEDENCE = 4


def _precedence(term: Term) -> int:
    if isinstance(term, Join):
        return _JOIN_PRECEDENCE
    if isinstance(term, Meet):
        return _MEET_PRECEDENCE
    if isinstance(term, Not):
        return _NOT_PRECEDENCE
    return _ATOM_PRECEDENCE


def _wrap(term: Term, parenthesise: bool) -> str:
    text = format_term(term)
    return f"({text})" if parenthesise else text


def format_term(term: Term) -> str:
    """Get the text of a term with the fewest parentheses that parse back to it.

    Chains associating to the left print bare, a right operand of the same
    operator is parenthesised.
    """
    if isinstance(term, Var):
        return term.name
    if isinstance(term, Const):
        return term.name
    if isinstance(term, Zero):
        return "0"
    if isinstance(term, One):
        return "1"
    if isinstance(term, Not):
        return "~" + _wrap(term.operand, _precedence(term.operand) < _NOT_PRECEDENCE)
    assert isinstance(term, (Join, Meet)), f"unexpected term node {type(term).__name__}"
    symbol = " + " if isinstance(term, Join) else " * "
    precedence = _precedence(term)
    left = _wrap(term.left, _precedence(term.left) < precedence)
    right = _wrap(term.right, _precedence(term.right) <= precedence)
    return left + symbol + right


def format_equation(equation: Equation) -> str:
    """Get the text of an equation, e.g. ``x1 <= c1``."""
    symbol = "<=" if equation.relation == Relation.LEQ else "="
    return f"{format_term(equation.lhs)} {symbol} {format_term(equation.rhs)}"


def format_system(system: System) -> str:
    """Get the system file text of a finite system, without algebra directives."""
    lines: List[str] = ["vars " + " ".join(system.variables)]
    lines.extend(format_equation(eq) for eq in system.equations)
    for schematic in system.schema:
        lines.append(f"each n={schematic.start}.. : {format_equation(schematic.template)}")
    return "\n".join(lines) + "\n"
