# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for geometric equivalence of two C-algebras that share their constants.

Two C-algebras with isomorphic subalgebras of constants assign every system
the same radical iff they have the same inconsistent systems and, for every
set of constants, its infimum exists and is 0 in one iff it does in the
other. Consistency of a finite system is decided by a join computed inside
C, so the first condition always holds; the second is checked over every
subset of a finite C.
"""

from __future__ import annotations

__all__ = [
    "ConstantCorrespondence",
    "GeomKind",
    "GeomVerdict",
    "check_shared_constants",
    "geom_equivalent",
]

import dataclasses
import enum
import logging
from typing import Dict, FrozenSet, List, Tuple

from boolgeo.algebra import CAlgebra, Element, subalgebra_minterms
from boolgeo.common import NonIsomorphicConstantsError
from boolgeo.common.config import DEFAULT_SUBSET_CAP
from boolgeo.syntax import format_term

_logger = logging.getLogger(__name__)

SignPattern = FrozenSet[Tuple[str, bool]]
"""The signs of every generator in one atom of C, by generator name."""


class GeomKind(enum.Enum):
    """An enumeration of the answers to a geometric equivalence query."""

    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"
    UNKNOWN = "unknown"


@dataclasses.dataclass(kw_only=True, frozen=True)
class GeomVerdict:
    """The answer to a geometric equivalence query.

    :ivar kind: equivalent, inequivalent or unknown.
    :vartype kind: GeomKind
    :ivar bound: the cap behind an unknown answer, 0 when exact.
    :vartype bound: int
    :ivar evidence: human readable evidence, by key. An inequivalent
        verdict names the set of constants whose infimum differs.
    :vartype evidence: Dict[str, str]
    """

    kind: GeomKind
    bound: int = 0
    evidence: Dict[str, str] = dataclasses.field(default_factory=dict)


class ConstantCorrespondence:
    """The isomorphism between the subalgebras of constants of two C-algebras.

    Atoms of C are matched by the signs of the named generators in them; an
    element of C maps to the join of the matched atoms below it.
    """

    def __init__(self: ConstantCorrespondence, first: CAlgebra, second: CAlgebra) -> None:
        """Match the atoms of C of both algebras.

        :raises NonIsomorphicConstantsError: if the constant names, the
            families or the atoms of C do not correspond.
        """
        self.first = first
        self.second = second
        if set(first.constants) != set(second.constants):
            raise NonIsomorphicConstantsError(
                f"constants {sorted(first.constants)} of {first.name} "
                f"differ from {sorted(second.constants)} of {second.name}"
            )
        if set(first.families) != set(second.families):
            raise NonIsomorphicConstantsError(f"{first.name} and {second.name} declare different families")
        if first.c_size != second.c_size:
            raise NonIsomorphicConstantsError(
                f"|C| is {first.c_size or 'infinite'} in {first.name} "
                f"and {second.c_size or 'infinite'} in {second.name}"
            )

        prefix = max(first.term_depth_bound, second.term_depth_bound)
        self._first_atoms = self._atoms(first, prefix)
        self._second_atoms = self._atoms(second, prefix)
        if set(self._first_atoms) != set(self._second_atoms):
            raise NonIsomorphicConstantsError(
                f"the constants of {first.name} and {second.name} satisfy different relations"
            )

    @staticmethod
    def _atoms(calg: CAlgebra, prefix: int) -> Dict[SignPattern, Element]:
        generators = calg.generators(prefix)
        names = [name for name, _ in generators]
        minterms = subalgebra_minterms([g for _, g in generators], calg.algebra.one())
        return {frozenset(zip(names, m.signs)): m.element for m in minterms}

    def to_second(self: ConstantCorrespondence, x: Element) -> Element:
        """Map an element of C of the first algebra to the second."""
        image = self.second.algebra.zero()
        for pattern, atom in self._first_atoms.items():
            if atom <= x:
                image = image | self._second_atoms[pattern]
        return image


def check_shared_constants(first: CAlgebra, second: CAlgebra) -> ConstantCorrespondence:
    """Get the isomorphism between the subalgebras of constants.

    :raises NonIsomorphicConstantsError: if there is none through the constant names.
    """
    return ConstantCorrespondence(first, second)


def _same_presentation(first: CAlgebra, second: CAlgebra) -> bool:
    return (
        first.algebra == second.algebra
        and first.constants == second.constants
        and set(first.families) == set(second.families)
    )


def _first_infimum_mismatch(
    elements: List[Element],
    correspondence: ConstantCorrespondence,
) -> Tuple[int, List[Element] | None]:
    """Walk every subset with running meets in both algebras.

    :returns: the number of subsets checked and the first subset whose
        infimum is 0 in exactly one algebra, if any.
    """
    images = [correspondence.to_second(x) for x in elements]
    checked = 0
    stack: List[Tuple[int, Element, Element, List[Element]]] = [
        (0, correspondence.first.algebra.one(), correspondence.second.algebra.one(), [])
    ]
    while stack:
        start, first_meet, second_meet, chosen = stack.pop()
        checked += 1
        if first_meet.is_zero != second_meet.is_zero:
            return checked, chosen
        if first_meet.is_zero:
            # every superset meets to 0 in both
            continue
        for i in range(start, len(elements)):
            stack.append((i + 1, first_meet & elements[i], second_meet & images[i], chosen + [elements[i]]))
    return checked, None


def geom_equivalent(
    first: CAlgebra,
    second: CAlgebra,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    logger: logging.Logger | None = None,
) -> GeomVerdict:
    """Decide whether two C-algebras sharing their constants are geometrically equivalent.

    :param first: the first C-algebra.
    :param second: the second C-algebra.
    :param subset_cap: the largest ``|C|`` whose subsets are all checked.
    :param logger: the logger to use.
    :raises NonIsomorphicConstantsError: if the subalgebras of constants do
        not correspond through the constant names.
    """
    logger = logger or _logger
    correspondence = check_shared_constants(first, second)
    if _same_presentation(first, second):
        return GeomVerdict(kind=GeomKind.EQUIVALENT, evidence={"reason": "identical presentations"})

    if first.is_schematic or second.is_schematic:
        evidence = {
            "reason": "C is infinite, infima of arbitrary sets of constants are not compared",
            "consistency": "join of bounds computed in C",
        }
        for family in sorted(first.families, key=lambda f: f.prefix):
            zero = family.infimum().is_zero
            evidence[f"family {family.prefix}"] = f"infimum {'is' if zero else 'is not'} 0 in both"
        logger.warning(f"{first.name} and {second.name}: C is infinite, equivalence is unknown")
        return GeomVerdict(kind=GeomKind.UNKNOWN, bound=subset_cap, evidence=evidence)

    size = first.c_size
    assert size is not None
    if size > subset_cap:
        logger.warning(f"|C| = {size} exceeds the subset cap {subset_cap}, equivalence is unknown")
        return GeomVerdict(kind=GeomKind.UNKNOWN, bound=subset_cap, evidence={"|C|": str(size)})

    elements = sorted(first.generated_c, key=lambda e: e.sort_key)
    checked, mismatch = _first_infimum_mismatch(elements, correspondence)
    logger.info(f"{first.name} and {second.name}: {checked} subsets of C checked")
    if mismatch is not None:
        subset = "{" + ", ".join(format_term(first.express(x)) for x in mismatch) + "}"
        return GeomVerdict(
            kind=GeomKind.INEQUIVALENT,
            evidence={"subset": subset, "reason": "infimum is 0 in exactly one algebra"},
        )
    return GeomVerdict(
        kind=GeomKind.EQUIVALENT,
        evidence={
            "|C|": str(size),
            "subsets": str(checked),
            "consistency": "join of bounds computed in C",
        },
    )
