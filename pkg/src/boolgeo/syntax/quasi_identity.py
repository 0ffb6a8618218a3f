# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for quasi-identities, ``premise & ... & premise -> conclusion``."""

from __future__ import annotations

__all__ = [
    "QuasiIdentity",
    "format_quasi_identity",
    "parse_quasi_identity",
]

import dataclasses
from typing import TYPE_CHECKING, List, Tuple

from .parser import Parser
from .printer import format_equation
from .terms import Equation, System, sort_variables

if TYPE_CHECKING:
    from boolgeo.algebra import CAlgebra


@dataclasses.dataclass(frozen=True)
class QuasiIdentity:
    """A universally quantified implication from equations to an equation."""

    premises: Tuple[Equation, ...]
    conclusion: Equation

    @property
    def variables(self: QuasiIdentity) -> List[str]:
        """Get the variables of all equations, in sorted order."""
        names = set(self.conclusion.variables())
        for premise in self.premises:
            names |= premise.variables()
        return sort_variables(names)

    def premise_system(self: QuasiIdentity, variables: List[str] | None = None) -> System:
        """Get the premises as a system over the quasi-identity's variables."""
        return System(tuple(variables or self.variables), self.premises)


def parse_quasi_identity(text: str, calg: CAlgebra | None = None, source: str = "<string>") -> QuasiIdentity:
    """Parse ``[equation ('&' equation)*] '->' equation``.

    :raises ParseError: on a syntax error or an unknown constant.
    """
    parser = Parser(text, calg=calg, source=source)
    premises, conclusion = parser.parse_quasi_identity()
    parser.expect_end()
    return QuasiIdentity(premises=tuple(premises), conclusion=conclusion)


def format_quasi_identity(qi: QuasiIdentity) -> str:
    """Get the text of a quasi-identity."""
    premises = " & ".join(format_equation(p) for p in qi.premises)
    conclusion = format_equation(qi.conclusion)
    return f"{premises} -> {conclusion}" if premises else f"-> {conclusion}"
