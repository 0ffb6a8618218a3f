# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Splitting of Z-space points into pairwise disjoint coordinates."""

__all__ = [
    "PointFile",
    "SplitOrder",
    "ZPoint",
    "bound_point",
    "canonical_violations",
    "load_point",
    "parse_point",
    "raise_coordinate",
    "split",
    "split_solves",
    "splitting_violations",
]

from .order import SplitOrder
from .point_file import PointFile, load_point, parse_point
from .split import (
    ZPoint,
    bound_point,
    canonical_violations,
    raise_coordinate,
    split,
    split_solves,
    splitting_violations,
)
