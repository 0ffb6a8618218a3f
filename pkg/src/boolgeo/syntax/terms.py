# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the abstract syntax of terms, equations and systems.

Nodes are immutable. The optional ``position`` of a node is the 1-based
``(line, column)`` it was parsed from; it takes no part in equality so
parsed and hand-built trees compare structurally.
"""

from __future__ import annotations

__all__ = [
    "Const",
    "Equation",
    "Join",
    "Meet",
    "Not",
    "One",
    "Position",
    "Relation",
    "SchematicEquation",
    "System",
    "Term",
    "Var",
    "Zero",
    "sort_variables",
    "z_name",
]

import dataclasses
import enum
import re
from typing import TYPE_CHECKING, Callable, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

if TYPE_CHECKING:
    from boolgeo.algebra import CAlgebra

Position = Tuple[int, int]
"""A 1-based ``(line, column)`` pair."""

PLACEHOLDER = "{n}"
"""The index placeholder allowed in constant names of schematic equations."""

_VARIABLE_KEY_REGEX = re.compile(r"^x(\d+)$")


def z_name(alpha: Sequence[int]) -> str:
    """Get the name of the Z variable of an index tuple, e.g. ``z(0,1)``."""
    return "z(" + ",".join(str(a) for a in alpha) + ")"


def sort_variables(names: Iterable[str]) -> List[str]:
    """Sort variable names, ``x<digits>`` by number first and the others after them."""

    def _key(name: str) -> Tuple[int, int, str]:
        match = _VARIABLE_KEY_REGEX.match(name)
        if match:
            return (0, int(match.group(1)), name)
        return (1, 0, name)

    return sorted(set(names), key=_key)


class Term:
    """Base class of the term nodes."""

    def children(self: Term) -> Tuple[Term, ...]:
        """Get the direct subterms."""
        return ()

    def variables(self: Term) -> FrozenSet[str]:
        """Get the names of the variables occurring in the term."""
        return frozenset().union(*(c.variables() for c in self.children()))

    def constants(self: Term) -> FrozenSet[str]:
        """Get the names of the constants occurring in the term."""
        return frozenset().union(*(c.constants() for c in self.children()))

    def depth(self: Term) -> int:
        """Get the height of the tree, leaves have depth 0."""
        return 1 + max((c.depth() for c in self.children()), default=-1)

    def map_constants(self: Term, fn: Callable[[str], str]) -> Term:
        """Get a copy with every constant name passed through ``fn``."""
        return self

    def substitute(self: Term, mapping: dict[str, Term]) -> Term:
        """Get a copy with the variables in ``mapping`` replaced by terms."""
        return self


@dataclasses.dataclass(frozen=True)
class Var(Term):
    """A variable such as ``x1`` or ``z(0,1)``."""

    name: str
    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)

    def variables(self: Var) -> FrozenSet[str]:
        """Get the variable itself."""
        return frozenset([self.name])

    def substitute(self: Var, mapping: dict[str, Term]) -> Term:
        """Get the replacement of this variable, or the variable itself."""
        return mapping.get(self.name, self)


@dataclasses.dataclass(frozen=True)
class Const(Term):
    """A named constant of the active C-algebra."""

    name: str
    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)

    def constants(self: Const) -> FrozenSet[str]:
        """Get the constant itself."""
        return frozenset([self.name])

    def map_constants(self: Const, fn: Callable[[str], str]) -> Term:
        """Get the constant renamed by ``fn``."""
        return Const(fn(self.name), position=self.position)


@dataclasses.dataclass(frozen=True)
class Zero(Term):
    """The bottom element ``0``."""

    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)


@dataclasses.dataclass(frozen=True)
class One(Term):
    """The top element ``1``."""

    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)


@dataclasses.dataclass(frozen=True)
class Join(Term):
    """``left + right``."""

    left: Term
    right: Term
    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)

    def children(self: Join) -> Tuple[Term, ...]:
        """Get both operands."""
        return (self.left, self.right)

    def map_constants(self: Join, fn: Callable[[str], str]) -> Term:
        """Rename the constants of both operands."""
        return Join(self.left.map_constants(fn), self.right.map_constants(fn), position=self.position)

    def substitute(self: Join, mapping: dict[str, Term]) -> Term:
        """Substitute in both operands."""
        return Join(self.left.substitute(mapping), self.right.substitute(mapping), position=self.position)


@dataclasses.dataclass(frozen=True)
class Meet(Term):
    """``left * right``."""

    left: Term
    right: Term
    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)

    def children(self: Meet) -> Tuple[Term, ...]:
        """Get both operands."""
        return (self.left, self.right)

    def map_constants(self: Meet, fn: Callable[[str], str]) -> Term:
        """Rename the constants of both operands."""
        return Meet(self.left.map_constants(fn), self.right.map_constants(fn), position=self.position)

    def substitute(self: Meet, mapping: dict[str, Term]) -> Term:
        """Substitute in both operands."""
        return Meet(self.left.substitute(mapping), self.right.substitute(mapping), position=self.position)


@dataclasses.dataclass(frozen=True)
class Not(Term):
    """``~operand``."""

    operand: Term
    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)

    def children(self: Not) -> Tuple[Term, ...]:
        """Get the operand."""
        return (self.operand,)

    def map_constants(self: Not, fn: Callable[[str], str]) -> Term:
        """Rename the constants of the operand."""
        return Not(self.operand.map_constants(fn), position=self.position)

    def substitute(self: Not, mapping: dict[str, Term]) -> Term:
        """Substitute in the operand."""
        return Not(self.operand.substitute(mapping), position=self.position)


class Relation(enum.Enum):
    """The relation symbol of an equation."""

    EQ = "="
    LEQ = "<="


@dataclasses.dataclass(frozen=True)
class Equation:
    """An equation ``lhs = rhs`` or an inequality ``lhs <= rhs``.

    An inequality ``t <= s`` means the equation ``t * s = t``, see
    :py:meth:`desugar`.
    """

    lhs: Term
    rhs: Term
    relation: Relation = Relation.EQ
    position: Optional[Position] = dataclasses.field(default=None, compare=False, repr=False)

    def desugar(self: Equation) -> Equation:
        """Get the equivalent equation with relation ``=``."""
        if self.relation == Relation.EQ:
            return self
        return Equation(Meet(self.lhs, self.rhs), self.lhs, Relation.EQ, position=self.position)

    def variables(self: Equation) -> FrozenSet[str]:
        """Get the variables of both sides."""
        return self.lhs.variables() | self.rhs.variables()

    def constants(self: Equation) -> FrozenSet[str]:
        """Get the constants of both sides."""
        return self.lhs.constants() | self.rhs.constants()

    def map_constants(self: Equation, fn: Callable[[str], str]) -> Equation:
        """Get a copy with every constant name passed through ``fn``."""
        return Equation(self.lhs.map_constants(fn), self.rhs.map_constants(fn), self.relation, self.position)

    def substitute(self: Equation, mapping: dict[str, Term]) -> Equation:
        """Get a copy with variables replaced by terms."""
        lhs = self.lhs.substitute(mapping)
        return Equation(lhs, self.rhs.substitute(mapping), self.relation, self.position)


@dataclasses.dataclass(frozen=True)
class SchematicEquation:
    """An equation template instantiated for ``n = start, start+1, ...``.

    Constant names of the template may contain the placeholder ``{n}``.
    """

    template: Equation
    start: int = 0

    def instance(self: SchematicEquation, n: int) -> Equation:
        """Get the equation for index ``n``."""
        return self.template.map_constants(lambda name: name.replace(PLACEHOLDER, str(n)))

    def instances(self: SchematicEquation, count: int) -> List[Equation]:
        """Get the first ``count`` instances."""
        return [self.instance(n) for n in range(self.start, self.start + count)]


@dataclasses.dataclass(frozen=True)
class System:
    """A system of equations over a declared, ordered variable list.

    A system may carry schematic equations, making it a lazily presented
    infinite system; :py:meth:`prefix` materialises a finite part of it.

    :ivar variables: the declared variables, in order.
    :vartype variables: Tuple[str, ...]
    :ivar equations: the fixed equations.
    :vartype equations: Tuple[Equation, ...]
    :ivar schema: schematic equations, empty for a finite system.
    :vartype schema: Tuple[SchematicEquation, ...]
    :ivar algebra: the C-algebra bound by the system file, if any.
    :vartype algebra: CAlgebra | None
    """

    variables: Tuple[str, ...]
    equations: Tuple[Equation, ...] = ()
    schema: Tuple[SchematicEquation, ...] = ()
    algebra: Optional[CAlgebra] = dataclasses.field(default=None, compare=False, repr=False)

    def __post_init__(self: System) -> None:
        """Check every equation only mentions declared variables."""
        declared = set(self.variables)
        assert len(declared) == len(self.variables), f"duplicate variables in {self.variables}"
        for eq in self.equations:
            undeclared = eq.variables() - declared
            assert not undeclared, f"equation mentions undeclared variables {sorted(undeclared)}"
        for schematic in self.schema:
            undeclared = schematic.template.variables() - declared
            assert not undeclared, f"schematic equation mentions undeclared variables {sorted(undeclared)}"

    @property
    def is_schematic(self: System) -> bool:
        """Check if the system has infinitely many equations."""
        return len(self.schema) > 0

    def __iter__(self: System) -> Iterator[Equation]:
        """Iterate over the fixed equations."""
        return iter(self.equations)

    def __len__(self: System) -> int:
        """Get the number of fixed equations."""
        return len(self.equations)

    def prefix(self: System, m: int) -> System:
        """Get the finite system of the fixed equations plus ``m`` rounds of schematic instances.

        Round ``i`` instantiates every schematic equation at its ``i``-th index.
        """
        instances = [s.instance(s.start + i) for i in range(m) for s in self.schema]
        return System(self.variables, self.equations + tuple(instances), algebra=self.algebra)

    def with_equations(self: System, equations: Iterable[Equation]) -> System:
        """Get a finite system over the same variables with other equations."""
        return System(self.variables, tuple(equations), algebra=self.algebra)

    def with_variables(self: System, variables: Iterable[str]) -> System:
        """Get the same equations over a (larger) variable list."""
        return System(tuple(variables), self.equations, self.schema, algebra=self.algebra)

    def with_algebra(self: System, algebra: CAlgebra) -> System:
        """Get the same system bound to another C-algebra."""
        return System(self.variables, self.equations, self.schema, algebra=algebra)
