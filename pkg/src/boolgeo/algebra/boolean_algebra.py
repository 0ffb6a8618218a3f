# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the concrete Boolean algebras.

Two implementations are provided: :py:class:`FiniteBooleanAlgebra`, the power
set of ``k`` atoms, and :py:class:`FiniteCofiniteAlgebra`, the algebra of
finite and cofinite subsets of the naturals.

Both share the element text format ``{i1,i2,...}``, ``co{i1,...}`` (the
finite-cofinite algebra only), ``0`` and ``1``.
"""

from __future__ import annotations

__all__ = [
    "BooleanAlgebra",
    "FiniteBooleanAlgebra",
    "FiniteCofiniteAlgebra",
    "format_element",
    "infimum_finite",
    "supremum_finite",
]

import abc
import dataclasses
import functools
import re
from typing import Iterable, Iterator, List, Sequence

from boolgeo.common import CarrierMismatchError, EmptyInfimumError

from .elements import FINITE_COFINITE_CARRIER, Element, FiniteCofiniteElement, FiniteElement

ELEMENT_REGEX = re.compile(r"^(?P<co>co)?\{\s*(?P<members>\d+(?:\s*,\s*\d+)*)?\s*\}$")
"""Regular expression of the braced element forms ``{...}`` and ``co{...}``."""


def infimum_finite(xs: Sequence[Element]) -> Element:
    """Get the iterated meet of a non-empty list of elements.

    :param xs: the elements, all of one algebra.
    :raises EmptyInfimumError: if ``xs`` is empty; use ``one()`` explicitly
        for an empty meet.
    """
    if len(xs) == 0:
        raise EmptyInfimumError("infimum of an empty list is not defined, use one() for an empty meet")
    return functools.reduce(lambda acc, x: acc.meet(x), xs[1:], xs[0])


def supremum_finite(xs: Sequence[Element]) -> Element:
    """Get the iterated join of a non-empty list of elements.

    :raises EmptyInfimumError: if ``xs`` is empty.
    """
    if len(xs) == 0:
        raise EmptyInfimumError("supremum of an empty list is not defined, use zero() for an empty join")
    return functools.reduce(lambda acc, x: acc.join(x), xs[1:], xs[0])


def format_element(x: Element) -> str:
    """Get the text form of an element.

    The bottom and top elements print as ``0`` and ``1``.
    """
    if x.is_zero:
        return "0"
    if x.is_one:
        return "1"
    if isinstance(x, FiniteElement):
        return "{" + ",".join(str(i) for i in sorted(x.atoms)) + "}"
    assert isinstance(x, FiniteCofiniteElement), f"unexpected element type {type(x).__name__}"
    prefix = "co" if x.cofinite else ""
    return prefix + "{" + ",".join(str(i) for i in sorted(x.members)) + "}"


class BooleanAlgebra(abc.ABC):
    """Abstract base class of a concrete Boolean algebra.

    The binary operations check that both operands belong to this algebra and
    raise :py:class:`CarrierMismatchError` otherwise.
    """

    @property
    @abc.abstractmethod
    def carrier(self: BooleanAlgebra) -> str:
        """Get the carrier tag shared by all elements of this algebra."""

    @property
    @abc.abstractmethod
    def is_finite(self: BooleanAlgebra) -> bool:
        """Check if this algebra has finitely many elements."""

    @abc.abstractmethod
    def zero(self: BooleanAlgebra) -> Element:
        """Get the bottom element."""

    @abc.abstractmethod
    def one(self: BooleanAlgebra) -> Element:
        """Get the top element."""

    @abc.abstractmethod
    def _element_from_members(self: BooleanAlgebra, members: Iterable[int], cofinite: bool) -> Element:
        ...

    def check_owns(self: BooleanAlgebra, *xs: Element) -> None:
        """Assert all elements belong to this algebra.

        :raises CarrierMismatchError: if one of them does not.
        """
        for x in xs:
            if not isinstance(x, Element) or x.carrier != self.carrier:
                other = x.carrier if isinstance(x, Element) else type(x).__name__
                raise CarrierMismatchError(f"element of {other} used with algebra {self.carrier}")

    def owns(self: BooleanAlgebra, x: Element) -> bool:
        """Check if the element belongs to this algebra."""
        return isinstance(x, Element) and x.carrier == self.carrier

    def join(self: BooleanAlgebra, x: Element, y: Element) -> Element:
        """Get the join of two elements."""
        self.check_owns(x, y)
        return x | y

    def meet(self: BooleanAlgebra, x: Element, y: Element) -> Element:
        """Get the meet of two elements."""
        self.check_owns(x, y)
        return x & y

    def complement(self: BooleanAlgebra, x: Element) -> Element:
        """Get the complement of an element."""
        self.check_owns(x)
        return ~x

    def leq(self: BooleanAlgebra, x: Element, y: Element) -> bool:
        """Check ``x <= y``, i.e. ``meet(x, y) == x``."""
        self.check_owns(x, y)
        return x.leq(y)

    def infimum_finite(self: BooleanAlgebra, xs: Sequence[Element]) -> Element:
        """Get the iterated meet of a non-empty list of elements of this algebra."""
        self.check_owns(*xs)
        return infimum_finite(xs)

    def supremum_finite(self: BooleanAlgebra, xs: Sequence[Element]) -> Element:
        """Get the iterated join of a non-empty list of elements of this algebra."""
        self.check_owns(*xs)
        return supremum_finite(xs)

    def parse_element(self: BooleanAlgebra, text: str) -> Element:
        """Parse the text form of an element of this algebra.

        :param text: one of ``0``, ``1``, ``{i,...}`` or ``co{i,...}``.
        :raises ValueError: if the text is malformed or names a natural
            outside the algebra.
        """
        value = text.strip()
        if value == "0":
            return self.zero()
        if value == "1":
            return self.one()

        match = ELEMENT_REGEX.match(value)
        if match is None:
            raise ValueError(f"'{text}' is not an element, expected 0, 1, {{i,...}} or co{{i,...}}")

        members_str = match.group("members")
        members = [int(m) for m in members_str.split(",")] if members_str else []
        return self._element_from_members(members, cofinite=match.group("co") is not None)

    def format_element(self: BooleanAlgebra, x: Element) -> str:
        """Get the text form of an element of this algebra."""
        self.check_owns(x)
        return format_element(x)


@dataclasses.dataclass(frozen=True)
class FiniteBooleanAlgebra(BooleanAlgebra):
    """The power set algebra of the atoms ``0..num_atoms-1``.

    Elements are stored as bitmasks so meets and joins are single bitwise
    operations, which is also what the vectorised enumeration relies on.
    """

    num_atoms: int

    def __post_init__(self: FiniteBooleanAlgebra) -> None:
        """Validate the number of atoms."""
        if self.num_atoms < 1:
            raise ValueError(f"a finite algebra needs at least 1 atom, got {self.num_atoms}")

    @property
    def carrier(self: FiniteBooleanAlgebra) -> str:
        """Get the carrier tag ``finite-<k>``."""
        return f"finite-{self.num_atoms}"

    @property
    def is_finite(self: FiniteBooleanAlgebra) -> bool:
        """Finite algebras are finite."""
        return True

    @property
    def mask(self: FiniteBooleanAlgebra) -> int:
        """Get the code of the top element."""
        return (1 << self.num_atoms) - 1

    @property
    def cardinality(self: FiniteBooleanAlgebra) -> int:
        """Get the number of elements, ``2**num_atoms``."""
        return 1 << self.num_atoms

    def zero(self: FiniteBooleanAlgebra) -> FiniteElement:
        """Get the empty set of atoms."""
        return FiniteElement(code=0, num_atoms=self.num_atoms)

    def one(self: FiniteBooleanAlgebra) -> FiniteElement:
        """Get the set of all atoms."""
        return FiniteElement(code=self.mask, num_atoms=self.num_atoms)

    def from_code(self: FiniteBooleanAlgebra, code: int) -> FiniteElement:
        """Get the element whose atoms are the set bits of ``code``."""
        return FiniteElement(code=int(code), num_atoms=self.num_atoms)

    def element(self: FiniteBooleanAlgebra, atoms: Iterable[int]) -> FiniteElement:
        """Get the element containing exactly the given atoms."""
        return self._element_from_members(atoms, cofinite=False)

    def atoms(self: FiniteBooleanAlgebra) -> List[FiniteElement]:
        """Get the atoms, in index order."""
        return [self.from_code(1 << i) for i in range(self.num_atoms)]

    def elements(self: FiniteBooleanAlgebra) -> Iterator[FiniteElement]:
        """Iterate over all elements in code order."""
        return (self.from_code(code) for code in range(self.cardinality))

    def _element_from_members(
        self: FiniteBooleanAlgebra, members: Iterable[int], cofinite: bool
    ) -> FiniteElement:
        if cofinite:
            raise ValueError("co{...} elements only exist in the finite-cofinite algebra")
        code = 0
        for atom in members:
            if not 0 <= atom < self.num_atoms:
                raise ValueError(f"atom {atom} is outside 0..{self.num_atoms - 1}")
            code |= 1 << atom
        return self.from_code(code)


@dataclasses.dataclass(frozen=True)
class FiniteCofiniteAlgebra(BooleanAlgebra):
    """The algebra of finite and cofinite subsets of the naturals."""

    @property
    def carrier(self: FiniteCofiniteAlgebra) -> str:
        """Get the carrier tag ``finite-cofinite``."""
        return FINITE_COFINITE_CARRIER

    @property
    def is_finite(self: FiniteCofiniteAlgebra) -> bool:
        """The finite-cofinite algebra is countably infinite."""
        return False

    def zero(self: FiniteCofiniteAlgebra) -> FiniteCofiniteElement:
        """Get the empty set."""
        return FiniteCofiniteElement(cofinite=False, members=frozenset())

    def one(self: FiniteCofiniteAlgebra) -> FiniteCofiniteElement:
        """Get the set of all naturals."""
        return FiniteCofiniteElement(cofinite=True, members=frozenset())

    def finite(self: FiniteCofiniteAlgebra, members: Iterable[int]) -> FiniteCofiniteElement:
        """Get the finite set of the given naturals."""
        return FiniteCofiniteElement(cofinite=False, members=frozenset(members))

    def cofinite(self: FiniteCofiniteAlgebra, excluded: Iterable[int]) -> FiniteCofiniteElement:
        """Get the set of all naturals except the given ones."""
        return FiniteCofiniteElement(cofinite=True, members=frozenset(excluded))

    def window_elements(self: FiniteCofiniteAlgebra, width: int) -> Iterator[FiniteCofiniteElement]:
        """Iterate over all finite and cofinite elements with payload inside ``0..width-1``.

        Finite sets come first, in order of their bitmask, then the cofinite
        sets in the same order.
        """
        for cofinite in (False, True):
            for code in range(1 << width):
                members = frozenset(i for i in range(width) if code >> i & 1)
                yield FiniteCofiniteElement(cofinite=cofinite, members=members)

    def _element_from_members(
        self: FiniteCofiniteAlgebra, members: Iterable[int], cofinite: bool
    ) -> FiniteCofiniteElement:
        return FiniteCofiniteElement(cofinite=cofinite, members=frozenset(members))
