# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the canonical form of lazily presented infinite systems.

The bounds a schematic equation gives an index tuple form a sequence in
``n``. When that sequence is recognised as the members of a declared
constant family, or their complements, the meet over all ``n`` is the
family's closed-form infimum (or the complement of its supremum).
"""

from __future__ import annotations

__all__ = [
    "BoundShape",
    "SchematicBound",
    "SchematicCanonicalSystem",
    "canonicalize_merged",
    "canonicalize_schematic",
]

import dataclasses
import enum
import logging
from typing import Dict, List, Optional, Tuple

from boolgeo.algebra import CAlgebra, ConstantFamily, Element
from boolgeo.common import ReplacementUnavailableError
from boolgeo.common.config import DEFAULT_BLOWUP_LIMIT, DEFAULT_TERM_DEPTH_BOUND
from boolgeo.syntax import System, z_name

from .canonical import CanonicalSystem, canonicalize_system, equation_bounds
from .substitution import Alpha

_logger = logging.getLogger(__name__)


class BoundShape(enum.Enum):
    """How the bounds of a schematic equation depend on the index."""

    CONSTANT = "constant"
    MEMBER = "member"
    COMPLEMENT = "complement"
    UNRECOGNISED = "unrecognised"


@dataclasses.dataclass(frozen=True)
class SchematicBound:
    """The bounds one schematic equation gives one index tuple.

    :ivar shape: how the bound depends on the index.
    :vartype shape: BoundShape
    :ivar family: the family of a member or complement shape.
    :vartype family: ConstantFamily | None
    :ivar value: the bound of a constant shape.
    :vartype value: Element | None
    """

    shape: BoundShape
    family: Optional[ConstantFamily] = None
    value: Optional[Element] = None

    def infimum(self: SchematicBound) -> Optional[Element]:
        """Get the meet of the bounds over all indices, ``None`` when it is unknown or missing."""
        if self.shape == BoundShape.CONSTANT:
            return self.value
        if self.shape == BoundShape.MEMBER and self.family is not None:
            return self.family.infimum()
        if self.shape == BoundShape.COMPLEMENT and self.family is not None:
            supremum = self.family.supremum()
            return ~supremum if supremum is not None else None
        return None

    def describe(self: SchematicBound) -> str:
        """Get a short description of the bound sequence."""
        if self.family is None:
            return self.shape.value
        return f"{self.shape.value} of {self.family.describe()}"


@dataclasses.dataclass(frozen=True)
class SchematicCanonicalSystem:
    """The canonical form of a system with schematic equations.

    :ivar fixed: the canonical form of the fixed equations.
    :vartype fixed: CanonicalSystem
    :ivar schematic_bounds: per index tuple, the bound sequence of each
        schematic equation.
    :vartype schematic_bounds: Dict[Alpha, Tuple[SchematicBound, ...]]
    """

    fixed: CanonicalSystem
    schematic_bounds: Dict[Alpha, Tuple[SchematicBound, ...]]

    @property
    def calg(self: SchematicCanonicalSystem) -> CAlgebra:
        """Get the C-algebra of the bounds."""
        return self.fixed.calg

    def merged_bound(self: SchematicCanonicalSystem, alpha: Alpha) -> Optional[Element]:
        """Get the meet of every bound of an index tuple, ``None`` if an infimum is unavailable."""
        bound = self.fixed.bound(alpha)
        for schematic in self.schematic_bounds[tuple(alpha)]:
            infimum = schematic.infimum()
            if infimum is None:
                return None
            bound = bound & infimum
        return bound

    def to_canonical(self: SchematicCanonicalSystem) -> CanonicalSystem:
        """Get the finite canonical system with the merged bounds.

        :raises ReplacementUnavailableError: if an infimum is unknown or does
            not exist in the algebra.
        """
        bounds: Dict[Alpha, Element] = {}
        for alpha in self.fixed.alphas:
            bound = self.merged_bound(alpha)
            if bound is None:
                reasons = ", ".join(s.describe() for s in self.schematic_bounds[alpha])
                raise ReplacementUnavailableError(
                    f"no known infimum for the bounds of {z_name(alpha)} ({reasons}), "
                    "not weakly replaceable under current knowledge"
                )
            bounds[alpha] = bound
        return CanonicalSystem(
            variables=self.fixed.variables,
            calg=self.fixed.calg,
            bounds=bounds,
            raw_bounds=self.fixed.raw_bounds,
        )


def _recognise(sequence: List[Element], start: int, calg: CAlgebra) -> SchematicBound:
    if all(x == sequence[0] for x in sequence):
        return SchematicBound(shape=BoundShape.CONSTANT, value=sequence[0])
    for declared in calg.families:
        if declared.index_of(declared.name(start)) is None:
            continue
        # the family restricted to the indices the schematic equation uses
        family = dataclasses.replace(declared, start=start)
        members = [family.member(start + i) for i in range(len(sequence))]
        if sequence == members:
            return SchematicBound(shape=BoundShape.MEMBER, family=family)
        if sequence == [~m for m in members]:
            return SchematicBound(shape=BoundShape.COMPLEMENT, family=family)
    return SchematicBound(shape=BoundShape.UNRECOGNISED)


def canonicalize_schematic(
    system: System,
    calg: CAlgebra | None = None,
    probe: int = DEFAULT_TERM_DEPTH_BOUND,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> SchematicCanonicalSystem:
    """Get the canonical form of a system with schematic equations.

    :param system: the system.
    :param calg: the C-algebra, defaults to the one bound to the system.
    :param probe: how many instances of each schematic equation are used to
        recognise the shape of its bounds.
    :param blowup_limit: the largest accepted number of variables.
    """
    logger = logger or _logger
    calg = calg or system.algebra
    assert calg is not None, "canonicalisation needs a C-algebra"
    fixed = canonicalize_system(system, calg, blowup_limit=blowup_limit, logger=logger)

    per_alpha: Dict[Alpha, List[SchematicBound]] = {alpha: [] for alpha in fixed.alphas}
    for schematic in system.schema:
        instance_bounds = [equation_bounds(eq, system.variables, calg) for eq in schematic.instances(probe)]
        for alpha in fixed.alphas:
            recognised = _recognise([b[alpha] for b in instance_bounds], schematic.start, calg)
            logger.debug(f"{z_name(alpha)}: schematic bound is {recognised.describe()}")
            per_alpha[alpha].append(recognised)

    return SchematicCanonicalSystem(
        fixed=fixed,
        schematic_bounds={alpha: tuple(bounds) for alpha, bounds in per_alpha.items()},
    )



def canonicalize_merged(
    system: System,
    calg: CAlgebra | None = None,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> CanonicalSystem:
    """Get the finite canonical form of a system, schematic equations included.

    A finite system gives its canonical form. For a schematic system every
    bound is met with the infima of its schematic bound sequences, so the
    result has exactly the solutions of the whole infinite system.

    :raises ReplacementUnavailableError: if a schematic bound sequence has
        no known infimum.
    """
    if not system.is_schematic:
        return canonicalize_system(system, calg, blowup_limit=blowup_limit, logger=logger)
    return canonicalize_schematic(system, calg, blowup_limit=blowup_limit, logger=logger).to_canonical()
