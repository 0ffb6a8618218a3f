# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the elements of the concrete Boolean algebras.

Elements are immutable values tagged with the carrier they belong to.
Combining elements of different carriers raises a
:py:class:`~boolgeo.common.CarrierMismatchError`; there is no implicit
embedding of one algebra into another.

The Python operators ``|``, ``&``, ``~``, ``^`` and ``<=`` are join, meet,
complement, symmetric difference and the lattice order respectively.
"""

from __future__ import annotations

__all__ = [
    "Element",
    "FiniteCofiniteElement",
    "FiniteElement",
]

import abc
import dataclasses
from typing import Any, FrozenSet, Tuple

from boolgeo.common import CarrierMismatchError

FINITE_COFINITE_CARRIER = "finite-cofinite"


def _check_same_carrier(first: Element, second: Any) -> None:
    if not isinstance(second, Element) or first.carrier != second.carrier:
        other = second.carrier if isinstance(second, Element) else type(second).__name__
        raise CarrierMismatchError(f"cannot combine an element of {first.carrier} with one of {other}")


class Element(abc.ABC):
    """An element of a concrete Boolean algebra."""

    @property
    @abc.abstractmethod
    def carrier(self: Element) -> str:
        """Get the tag of the algebra instance this element belongs to."""

    @property
    @abc.abstractmethod
    def size(self: Element) -> int:
        """Get the number of naturals (or atoms) listed in the payload."""

    @property
    @abc.abstractmethod
    def sort_key(self: Element) -> Tuple:
        """Get a key giving a deterministic total order for output."""

    @abc.abstractmethod
    def _meet(self: Element, other: Element) -> Element:
        ...

    @abc.abstractmethod
    def _complement(self: Element) -> Element:
        ...

    @property
    @abc.abstractmethod
    def is_zero(self: Element) -> bool:
        """Check if this is the bottom element."""

    @property
    @abc.abstractmethod
    def is_one(self: Element) -> bool:
        """Check if this is the top element."""

    def meet(self: Element, other: Element) -> Element:
        """Get the meet (conjunction) of this element and ``other``."""
        _check_same_carrier(self, other)
        return self._meet(other)

    def join(self: Element, other: Element) -> Element:
        """Get the join (disjunction) of this element and ``other``."""
        _check_same_carrier(self, other)
        return self._complement()._meet(other._complement())._complement()

    def complement(self: Element) -> Element:
        """Get the complement (negation) of this element."""
        return self._complement()

    def difference(self: Element, other: Element) -> Element:
        """Get ``self · ~other``."""
        _check_same_carrier(self, other)
        return self._meet(other._complement())

    def symmetric_difference(self: Element, other: Element) -> Element:
        """Get ``self · ~other ∨ ~self · other``."""
        return self.difference(other).join(other.difference(self))

    def leq(self: Element, other: Element) -> bool:
        """Check ``self <= other``, i.e. ``self · other = self``."""
        _check_same_carrier(self, other)
        return self._meet(other) == self

    def __and__(self: Element, other: Element) -> Element:
        return self.meet(other)

    def __or__(self: Element, other: Element) -> Element:
        return self.join(other)

    def __xor__(self: Element, other: Element) -> Element:
        return self.symmetric_difference(other)

    def __invert__(self: Element) -> Element:
        return self.complement()

    def __le__(self: Element, other: Element) -> bool:
        return self.leq(other)

    def __ge__(self: Element, other: Element) -> bool:
        return other.leq(self)


@dataclasses.dataclass(frozen=True, eq=True)
class FiniteElement(Element):
    """An element of the finite algebra with ``num_atoms`` atoms.

    The element is the set of atom indices stored as the bits of ``code``:
    atom ``i`` belongs to the element iff bit ``i`` of ``code`` is set.
    """

    code: int
    num_atoms: int

    def __post_init__(self: FiniteElement) -> None:
        """Validate the payload lies within the atom range."""
        if self.num_atoms < 0:
            raise ValueError(f"number of atoms must be non-negative, got {self.num_atoms}")
        if not 0 <= self.code < (1 << self.num_atoms):
            raise ValueError(f"code {self.code} has atoms outside 0..{self.num_atoms - 1}")

    @property
    def carrier(self: FiniteElement) -> str:
        """Get the tag of the algebra instance this element belongs to."""
        return f"finite-{self.num_atoms}"

    @property
    def mask(self: FiniteElement) -> int:
        """Get the code of the top element of the carrier."""
        return (1 << self.num_atoms) - 1

    @property
    def atoms(self: FiniteElement) -> FrozenSet[int]:
        """Get the atom indices contained in this element."""
        return frozenset(i for i in range(self.num_atoms) if self.code >> i & 1)

    @property
    def size(self: FiniteElement) -> int:
        """Get the number of atoms below this element."""
        return bin(self.code).count("1")

    @property
    def sort_key(self: FiniteElement) -> Tuple:
        """Get the element code as the output order key."""
        return (self.code,)

    @property
    def is_zero(self: FiniteElement) -> bool:
        """Check if this is the bottom element."""
        return self.code == 0

    @property
    def is_one(self: FiniteElement) -> bool:
        """Check if this is the top element."""
        return self.code == self.mask

    def _meet(self: FiniteElement, other: Element) -> FiniteElement:
        assert isinstance(other, FiniteElement)
        return FiniteElement(code=self.code & other.code, num_atoms=self.num_atoms)

    def _complement(self: FiniteElement) -> FiniteElement:
        return FiniteElement(code=self.mask ^ self.code, num_atoms=self.num_atoms)

    def __repr__(self: FiniteElement) -> str:
        return f"FiniteElement({sorted(self.atoms)}, num_atoms={self.num_atoms})"


@dataclasses.dataclass(frozen=True, eq=True)
class FiniteCofiniteElement(Element):
    """An element of the algebra of finite and cofinite subsets of the naturals.

    In finite mode ``members`` lists the naturals in the set, in cofinite mode
    it lists the naturals excluded from the set. The empty finite set is 0
    and the empty cofinite set is 1.
    """

    cofinite: bool
    members: FrozenSet[int]

    def __post_init__(self: FiniteCofiniteElement) -> None:
        """Validate the payload only lists naturals."""
        for member in self.members:
            if not isinstance(member, int) or member < 0:
                raise ValueError(f"payload may only list naturals, got {member!r}")

    @property
    def carrier(self: FiniteCofiniteElement) -> str:
        """Get the tag of the algebra instance this element belongs to."""
        return FINITE_COFINITE_CARRIER

    @property
    def size(self: FiniteCofiniteElement) -> int:
        """Get the number of listed naturals."""
        return len(self.members)

    @property
    def sort_key(self: FiniteCofiniteElement) -> Tuple:
        """Order finite sets before cofinite ones, then by listed naturals."""
        return (self.cofinite, len(self.members), tuple(sorted(self.members)))

    @property
    def is_zero(self: FiniteCofiniteElement) -> bool:
        """Check if this is the empty set."""
        return not self.cofinite and not self.members

    @property
    def is_one(self: FiniteCofiniteElement) -> bool:
        """Check if this is the set of all naturals."""
        return self.cofinite and not self.members

    def contains(self: FiniteCofiniteElement, natural: int) -> bool:
        """Check if ``natural`` belongs to this set."""
        return (natural in self.members) != self.cofinite

    def _meet(self: FiniteCofiniteElement, other: Element) -> FiniteCofiniteElement:
        assert isinstance(other, FiniteCofiniteElement)
        if not self.cofinite and not other.cofinite:
            return FiniteCofiniteElement(cofinite=False, members=self.members & other.members)
        if not self.cofinite:
            return FiniteCofiniteElement(cofinite=False, members=self.members - other.members)
        if not other.cofinite:
            return FiniteCofiniteElement(cofinite=False, members=other.members - self.members)
        return FiniteCofiniteElement(cofinite=True, members=self.members | other.members)

    def _complement(self: FiniteCofiniteElement) -> FiniteCofiniteElement:
        return FiniteCofiniteElement(cofinite=not self.cofinite, members=self.members)

    def __repr__(self: FiniteCofiniteElement) -> str:
        prefix = "co" if self.cofinite else ""
        return f"FiniteCofiniteElement({prefix}{sorted(self.members)})"
