# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the classes of algebras and the verdicts about membership in them."""

from __future__ import annotations

__all__ = [
    "AlgebraClass",
    "ClassVerdict",
]

import dataclasses
import enum
from typing import Dict

from boolgeo.common import Verdict


class AlgebraClass(enum.Enum):
    """An enumeration of the classes an algebra can be tested for."""

    N = "N"
    """Equationally Noetherian: every system is equivalent to a finite subsystem."""

    N_PRIME = "N'"
    """Weakly equationally Noetherian: every system is equivalent to some finite system."""

    N_C = "N_c"
    """Consistently Noetherian: every consistent system is equivalent to a finite subsystem."""

    Q = "Q"
    """q-compact."""

    U = "U"
    """u-compact."""

    @staticmethod
    def from_str(value: str) -> AlgebraClass:
        """Get the class from its name, e.g. ``N'`` or ``N_PRIME``."""
        for algebra_class in AlgebraClass:
            if value.strip() in (algebra_class.value, algebra_class.name):
                return algebra_class
        names = [c.value for c in AlgebraClass]
        raise ValueError(f"unknown algebra class '{value}', expected one of {names}")


@dataclasses.dataclass(kw_only=True, frozen=True)
class ClassVerdict:
    """Whether an algebra belongs to a class, with the evidence.

    :ivar algebra_class: the class.
    :vartype algebra_class: AlgebraClass
    :ivar verdict: yes, no or unknown.
    :vartype verdict: Verdict
    :ivar bound: the search bound behind a bounded or unknown answer, 0 when exact.
    :vartype bound: int
    :ivar evidence: human readable evidence, by key.
    :vartype evidence: Dict[str, str]
    """

    algebra_class: AlgebraClass
    verdict: Verdict
    bound: int = 0
    evidence: Dict[str, str] = dataclasses.field(default_factory=dict)
