# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the linear orders on index tuples used by the splitting."""

from __future__ import annotations

__all__ = [
    "SplitOrder",
]

import dataclasses
import re
from typing import Dict, Sequence, Tuple

from boolgeo.common import InvalidOrderError
from boolgeo.normalizer import Alpha, all_tuples

BITS_REGEX = re.compile(r"^[01]+$")


@dataclasses.dataclass(frozen=True)
class SplitOrder:
    """A total order on the ``2**n`` index tuples, listed from first to last.

    :ivar alphas: every index tuple exactly once; the first one is the
        coordinate the splitting leaves untouched.
    :vartype alphas: Tuple[Alpha, ...]
    """

    alphas: Tuple[Alpha, ...]

    def __post_init__(self: SplitOrder) -> None:
        """Check the order lists every tuple of one length exactly once.

        :raises InvalidOrderError: if it does not.
        """
        if not self.alphas:
            raise InvalidOrderError("an order needs at least one index tuple")
        n = len(self.alphas[0])
        if any(len(alpha) != n for alpha in self.alphas):
            raise InvalidOrderError("index tuples of an order must all have the same length")
        if len(set(self.alphas)) != len(self.alphas) or set(self.alphas) != set(all_tuples(n)):
            raise InvalidOrderError(f"order is not a permutation of the {2 ** n} index tuples of length {n}")

    @property
    def n(self: SplitOrder) -> int:
        """Get the length of the index tuples."""
        return len(self.alphas[0])

    @property
    def first(self: SplitOrder) -> Alpha:
        """Get the least index tuple."""
        return self.alphas[0]

    def positions(self: SplitOrder) -> Dict[Alpha, int]:
        """Get the position of every index tuple."""
        return {alpha: i for i, alpha in enumerate(self.alphas)}

    def describe(self: SplitOrder) -> str:
        """Get the order in the format accepted by :py:meth:`parse`."""
        return ",".join("".join(str(a) for a in alpha) for alpha in self.alphas)

    @staticmethod
    def lexicographic(n: int) -> SplitOrder:
        """Get the lexicographic order, starting at ``(0,...,0)``."""
        return SplitOrder(alphas=tuple(all_tuples(n)))

    @staticmethod
    def with_first(n: int, first: Sequence[int]) -> SplitOrder:
        """Get the lexicographic order with ``first`` moved to the front."""
        head = tuple(first)
        if head not in set(all_tuples(n)):
            raise InvalidOrderError(f"{head} is not an index tuple of length {n}")
        return SplitOrder(alphas=(head,) + tuple(alpha for alpha in all_tuples(n) if alpha != head))

    @staticmethod
    def parse(text: str, n: int) -> SplitOrder:
        """Parse ``lex`` or a comma separated list of bit strings such as ``10,00,01,11``.

        :raises InvalidOrderError: if the text is not an order on tuples of length ``n``.
        """
        value = text.strip()
        if value == "lex":
            return SplitOrder.lexicographic(n)
        parts = [part.strip() for part in value.split(",")]
        for part in parts:
            if not BITS_REGEX.match(part) or len(part) != n:
                raise InvalidOrderError(f"'{part}' is not a bit string of length {n}")
        return SplitOrder(alphas=tuple(tuple(int(b) for b in part) for part in parts))
