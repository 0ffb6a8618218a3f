# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Solution sets, consistency, radicals, equivalence and finite replacements."""

__all__ = [
    "EquivalenceMethod",
    "EquivalenceResult",
    "RadicalKind",
    "RadicalVerdict",
    "SolutionSet",
    "consistency_witness",
    "count_canonical_solutions",
    "count_finite_cofinite_solutions",
    "describe_solutions",
    "enumerate_solutions",
    "finite_replacement",
    "finite_replacement_x",
    "is_consistent",
    "is_consistent_canonical",
    "point_key",
    "radical_member",
    "radical_member_by_enumeration",
    "radical_member_canonical",
    "systems_equivalent",
]

from .consistency import (
    consistency_witness,
    count_canonical_solutions,
    count_finite_cofinite_solutions,
    describe_solutions,
    is_consistent,
    is_consistent_canonical,
)
from .enumeration import SolutionSet, enumerate_solutions, point_key
from .equivalence import EquivalenceMethod, EquivalenceResult, systems_equivalent
from .radical import (
    RadicalKind,
    RadicalVerdict,
    radical_member,
    radical_member_by_enumeration,
    radical_member_canonical,
)
from .replacement import finite_replacement, finite_replacement_x
