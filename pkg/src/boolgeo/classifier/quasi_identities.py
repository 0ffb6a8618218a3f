# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for evaluating quasi-identities.

Over a finite algebra every point satisfying the premises is enumerated.
Over an infinite one the quasi-identity holds iff its conclusion is in the
radical of its premises.
"""

from __future__ import annotations

__all__ = [
    "QuasiIdentityResult",
    "evaluate_quasi_identity",
]

import dataclasses
import logging
from typing import Dict, Optional

from boolgeo.algebra import CAlgebra, Element
from boolgeo.common.config import DEFAULT_BLOWUP_LIMIT, DEFAULT_ENUMERATION_BUDGET
from boolgeo.solver import enumerate_solutions, radical_member
from boolgeo.syntax import QuasiIdentity, format_quasi_identity, satisfies

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class QuasiIdentityResult:
    """The truth value of a quasi-identity in an algebra.

    :ivar holds: whether every point satisfying the premises satisfies the conclusion.
    :vartype holds: bool
    :ivar counterexample: the least point satisfying the premises but not
        the conclusion, when the quasi-identity fails.
    :vartype counterexample: Dict[str, Element] | None
    """

    holds: bool
    counterexample: Optional[Dict[str, Element]] = None

    def __bool__(self: QuasiIdentityResult) -> bool:
        """Get the truth value."""
        return self.holds


def evaluate_quasi_identity(
    qi: QuasiIdentity,
    calg: CAlgebra,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> QuasiIdentityResult:
    """Decide whether a quasi-identity holds in a C-algebra.

    :raises BudgetExceededError: if ``|B|**n`` exceeds the budget of a finite algebra.
    :raises BlowUpLimitError: if an infinite algebra is given too many variables.
    """
    logger = logger or _logger
    premises = qi.premise_system()
    if not calg.algebra.is_finite:
        verdict = radical_member(premises, qi.conclusion, calg, blowup_limit=blowup_limit, logger=logger)
        return QuasiIdentityResult(holds=verdict.is_member, counterexample=verdict.witness)

    for point in enumerate_solutions(premises, calg, budget=budget, logger=logger):
        if not satisfies(point, qi.conclusion, calg):
            logger.debug(f"{format_quasi_identity(qi)} fails in {calg.name}")
            return QuasiIdentityResult(holds=False, counterexample=point)
    return QuasiIdentityResult(holds=True)
