# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Canonical forms over disjoint-cover Z variables and the X/Z change of variables."""

__all__ = [
    "Alpha",
    "BoundShape",
    "CanonicalSystem",
    "SchematicBound",
    "SchematicCanonicalSystem",
    "all_tuples",
    "canonicalize_equation",
    "canonicalize_merged",
    "canonicalize_schematic",
    "canonicalize_system",
    "equation_bounds",
    "meet_bounds",
    "parse_alpha",
    "reduce_to_subsystem",
    "x_from_z",
    "x_term",
    "z_from_x",
    "z_term",
    "z_variables",
]

from .canonical import (
    CanonicalSystem,
    canonicalize_equation,
    canonicalize_system,
    equation_bounds,
    meet_bounds,
    reduce_to_subsystem,
)
from .schematic import (
    BoundShape,
    SchematicBound,
    SchematicCanonicalSystem,
    canonicalize_merged,
    canonicalize_schematic,
)
from .substitution import Alpha, all_tuples, parse_alpha, x_from_z, x_term, z_from_x, z_term, z_variables
