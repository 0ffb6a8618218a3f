# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for exhaustive enumeration of solutions over a finite algebra.

The points of ``B**n`` are numbered so that ``x1`` is the most significant
digit; a chunk of consecutive numbers is decoded into one numpy column of
element codes per variable and every equation is checked on the whole
chunk at once. Solutions therefore come out in lexicographic order of the
codes of ``(x1, x2, ...)``.
"""

from __future__ import annotations

__all__ = [
    "SolutionSet",
    "enumerate_solutions",
    "point_key",
]

import dataclasses
import logging
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from boolgeo.algebra import CAlgebra, Element, FiniteBooleanAlgebra, FiniteElement
from boolgeo.common import BudgetExceededError, PreconditionError, UnsupportedAlgebraError
from boolgeo.common.config import DEFAULT_CHUNK_SIZE, DEFAULT_ENUMERATION_BUDGET
from boolgeo.normalizer import CanonicalSystem
from boolgeo.syntax import CodeArray, System, satisfied_mask

_logger = logging.getLogger(__name__)


def point_key(point: Mapping[str, Element], variables: Sequence[str]) -> Tuple:
    """Get the sort key of a point, lexicographic in the given variable order."""
    return tuple(point[v].sort_key for v in variables)


@dataclasses.dataclass(frozen=True)
class SolutionSet:
    """The solutions of a system, listed or described by canonical bounds.

    :ivar variables: the variables of the points, in order.
    :vartype variables: Tuple[str, ...]
    :ivar points: the solutions in lexicographic order, when listed.
    :vartype points: Tuple[Dict[str, Element], ...] | None
    :ivar canonical: the canonical bounds describing the solutions, when
        not listed.
    :vartype canonical: CanonicalSystem | None
    :ivar count: the number of solutions, ``None`` when infinite or unknown.
    :vartype count: int | None
    """

    variables: Tuple[str, ...]
    points: Optional[Tuple[Dict[str, Element], ...]] = None
    canonical: Optional[CanonicalSystem] = None
    count: Optional[int] = None

    def __post_init__(self: SolutionSet) -> None:
        """Check a listed solution set is consistent with its count."""
        assert self.points is not None or self.canonical is not None, "a solution set needs points or bounds"
        if self.points is not None:
            assert self.count == len(self.points), f"count {self.count} but {len(self.points)} points"

    @property
    def is_explicit(self: SolutionSet) -> bool:
        """Check if the solutions are listed."""
        return self.points is not None

    @property
    def is_empty(self: SolutionSet) -> bool:
        """Check if there are no solutions."""
        return self.count == 0

    def __iter__(self: SolutionSet) -> Iterator[Dict[str, Element]]:
        """Iterate over the listed solutions."""
        assert self.points is not None, "a symbolic solution set cannot be iterated"
        return iter(self.points)

    def __len__(self: SolutionSet) -> int:
        """Get the number of listed solutions."""
        assert self.points is not None, "a symbolic solution set has no length"
        return len(self.points)

    def keys(self: SolutionSet) -> List[Tuple]:
        """Get the sort keys of the listed solutions."""
        return [point_key(p, self.variables) for p in self]


def _finite_algebra(calg: CAlgebra) -> FiniteBooleanAlgebra:
    if not isinstance(calg.algebra, FiniteBooleanAlgebra):
        raise UnsupportedAlgebraError(f"enumeration needs a finite algebra, not {calg.algebra.carrier}")
    return calg.algebra


def enumerate_solutions(
    system: System,
    calg: CAlgebra | None = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    logger: logging.Logger | None = None,
) -> SolutionSet:
    """Find every solution of a finite system by trying every point.

    :param system: the system.
    :param calg: the C-algebra, defaults to the one bound to the system.
    :param budget: the largest number of points that may be tried.
    :param chunk_size: the number of points checked per numpy batch.
    :param logger: the logger to use.
    :raises UnsupportedAlgebraError: if the algebra is not finite.
    :raises BudgetExceededError: if ``|B|**n`` exceeds the budget.
    :raises PreconditionError: if the system has schematic equations.
    """
    logger = logger or _logger
    calg = calg or system.algebra
    assert calg is not None, "enumeration needs a C-algebra"
    algebra = _finite_algebra(calg)
    if system.is_schematic:
        raise PreconditionError("only finite systems can be enumerated", constraint="no 'each' equations")

    variables = list(system.variables)
    n = len(variables)
    bits = algebra.num_atoms
    total = 1 << (bits * n)
    if total > budget:
        raise BudgetExceededError(f"{algebra.cardinality}**{n} = {total} points exceed the budget {budget}")

    mask = np.uint64(algebra.mask)
    shifts = [np.uint64(bits * (n - 1 - j)) for j in range(n)]
    solutions: List[Dict[str, Element]] = []
    for start in range(0, total, chunk_size):
        stop = min(total, start + chunk_size)
        index = np.arange(start, stop, dtype=np.uint64)
        columns: Dict[str, CodeArray] = {v: (index >> shift) & mask for v, shift in zip(variables, shifts)}
        satisfied = satisfied_mask(system.equations, columns, calg)
        hits = np.flatnonzero(satisfied)
        logger.debug(f"points {start}..{stop - 1}: {len(hits)} solutions")
        for k in hits:
            solutions.append({v: _decode(algebra, columns[v][k]) for v in variables})

    logger.info(f"{len(solutions)} solutions among {total} points")
    return SolutionSet(variables=tuple(variables), points=tuple(solutions), count=len(solutions))


def _decode(algebra: FiniteBooleanAlgebra, code: np.uint64) -> FiniteElement:
    return algebra.from_code(int(code))
