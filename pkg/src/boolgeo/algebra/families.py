# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for schematic constant families of the finite-cofinite algebra.

A family is declared in an algebra file with::

    family <prefix> <kind> n=<start>..[<stop>]

and its member ``n`` is addressed by the constant name ``<prefix><n>``.
Leaving out ``<stop>`` declares an infinite family.
"""

from __future__ import annotations

__all__ = [
    "ConstantFamily",
    "FamilyKind",
    "parse_range",
]

import dataclasses
import enum
import re
from typing import FrozenSet, Iterator, Optional, Tuple

from .elements import FiniteCofiniteElement

RANGE_REGEX = re.compile(r"^n=(?P<start>\d+)\.\.(?P<stop>\d+)?$")
"""Regular expression of a family index range, e.g. ``n=1..`` or ``n=0..20``."""


def parse_range(text: str) -> Tuple[int, Optional[int]]:
    """Parse an index range ``n=<start>..[<stop>]``.

    :returns: the start index and the inclusive stop index, or ``None`` for an
        unbounded range.
    :raises ValueError: if the text is not a range or ``stop < start``.
    """
    match = RANGE_REGEX.match(text.strip())
    if match is None:
        raise ValueError(f"'{text}' is not an index range, expected n=<start>..[<stop>]")
    start = int(match.group("start"))
    stop = int(match.group("stop")) if match.group("stop") is not None else None
    if stop is not None and stop < start:
        raise ValueError(f"index range '{text}' is empty")
    return start, stop


class FamilyKind(enum.Enum):
    """An enumeration of the closed forms a constant family can take."""

    SEGMENT = "segment"
    """Member ``n`` is ``{0, 1, ..., n-1}``."""

    SINGLETON = "singleton"
    """Member ``n`` is ``{n}``."""

    EVEN_SEGMENT = "even-segment"
    """Member ``n`` is ``{0, 2, ..., 2(n-1)}``."""

    ODD_SEGMENT = "odd-segment"
    """Member ``n`` is ``{1, 3, ..., 2n-1}``."""

    @staticmethod
    def from_str(value: str) -> FamilyKind:
        """Get the family kind from its text form, e.g. ``even-segment``."""
        for kind in FamilyKind:
            if kind.value == value.strip().lower():
                return kind
        raise ValueError(f"unknown family kind '{value}', expected one of {[k.value for k in FamilyKind]}")

    def members(self: FamilyKind, n: int) -> FrozenSet[int]:
        """Get the naturals in member ``n`` of a family of this kind."""
        if self == FamilyKind.SEGMENT:
            return frozenset(range(n))
        if self == FamilyKind.SINGLETON:
            return frozenset([n])
        if self == FamilyKind.EVEN_SEGMENT:
            return frozenset(range(0, 2 * n, 2))
        return frozenset(range(1, 2 * n, 2))

    @property
    def is_increasing(self: FamilyKind) -> bool:
        """Check if the members form an increasing chain."""
        return self != FamilyKind.SINGLETON


@dataclasses.dataclass(kw_only=True, frozen=True)
class ConstantFamily:
    """A lazily presented family of finite-cofinite constants.

    :ivar prefix: the constant name prefix, member ``n`` is ``<prefix><n>``.
    :vartype prefix: str
    :ivar kind: the closed form of the members.
    :vartype kind: FamilyKind
    :ivar start: the first index.
    :vartype start: int
    :ivar stop: the last index (inclusive), ``None`` for an infinite family.
    :vartype stop: int | None
    """

    prefix: str
    kind: FamilyKind
    start: int = 0
    stop: Optional[int] = None

    def __post_init__(self: ConstantFamily) -> None:
        """Validate the family declaration."""
        assert re.match(r"^c[A-Za-z_]*$", self.prefix), f"family prefix '{self.prefix}' must be c<letters>"
        assert self.start >= 0, f"family start must be a natural, got {self.start}"
        assert self.stop is None or self.stop >= self.start, f"empty family range {self.start}..{self.stop}"

    @property
    def is_infinite(self: ConstantFamily) -> bool:
        """Check if the family has infinitely many members."""
        return self.stop is None

    def name(self: ConstantFamily, n: int) -> str:
        """Get the constant name of member ``n``."""
        return f"{self.prefix}{n}"

    def index_of(self: ConstantFamily, name: str) -> Optional[int]:
        """Get the index named by a constant name, ``None`` if it is not a member."""
        if not name.startswith(self.prefix):
            return None
        suffix = name[len(self.prefix) :]
        if not suffix.isdigit():
            return None
        n = int(suffix)
        if n < self.start or (self.stop is not None and n > self.stop):
            return None
        return n

    def member(self: ConstantFamily, n: int) -> FiniteCofiniteElement:
        """Get member ``n`` of the family."""
        return FiniteCofiniteElement(cofinite=False, members=self.kind.members(n))

    def indices(self: ConstantFamily, count: int | None = None) -> Iterator[int]:
        """Iterate over the first ``count`` indices, or all indices of a finite family."""
        assert count is not None or not self.is_infinite, "an infinite family needs a count"
        last = self.stop if self.stop is not None else self.start + (count or 0) - 1
        if count is not None:
            last = min(last, self.start + count - 1)
        return iter(range(self.start, last + 1))

    def infimum(self: ConstantFamily) -> FiniteCofiniteElement:
        """Get the infimum of all members.

        Every kind has one: increasing chains meet in their first member and
        distinct singletons meet in the empty set.
        """
        if self.kind.is_increasing:
            return self.member(self.start)
        if self.stop == self.start:
            return self.member(self.start)
        return FiniteCofiniteElement(cofinite=False, members=frozenset())

    def supremum(self: ConstantFamily) -> Optional[FiniteCofiniteElement]:
        """Get the supremum of all members, ``None`` when it does not exist.

        The even and odd segments of an infinite family exhaust the even
        (odd) naturals, which are neither finite nor cofinite.
        """
        if self.stop is not None:
            if self.kind.is_increasing:
                return self.member(self.stop)
            return FiniteCofiniteElement(cofinite=False, members=frozenset(range(self.start, self.stop + 1)))
        if self.kind == FamilyKind.SEGMENT:
            return FiniteCofiniteElement(cofinite=True, members=frozenset())
        if self.kind == FamilyKind.SINGLETON:
            return FiniteCofiniteElement(cofinite=True, members=frozenset(range(self.start)))
        return None

    def describe(self: ConstantFamily) -> str:
        """Get the directive that declares this family."""
        stop = "" if self.stop is None else str(self.stop)
        return f"family {self.prefix} {self.kind.value} n={self.start}..{stop}"
