# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for splitting a Z-space point into pairwise disjoint coordinates.

Given a point ``p`` and an order on the index tuples with least element
``ω``, the split point is::

    q(ω) = p(ω)
    q(α) = p(α) * ~p(β) for every β before α

Each coordinate loses exactly what earlier coordinates already cover, so
the coordinates of ``q`` are pairwise disjoint while every prefix join is
unchanged.
"""

from __future__ import annotations

__all__ = [
    "ZPoint",
    "bound_point",
    "canonical_violations",
    "raise_coordinate",
    "split",
    "split_solves",
    "splitting_violations",
]

import logging
from typing import Dict, List, Mapping

from boolgeo.algebra import Element, format_element, supremum_finite
from boolgeo.common import InvalidOrderError, MissingCoordinateError, PreconditionError
from boolgeo.normalizer import Alpha, CanonicalSystem
from boolgeo.syntax import z_name

from .order import SplitOrder

_logger = logging.getLogger(__name__)

ZPoint = Mapping[str, Element]
"""A Z-space point, keyed by Z variable names such as ``z(0,1)``."""


def _coordinates(p: ZPoint, order: SplitOrder) -> List[Element]:
    names = [z_name(alpha) for alpha in order.alphas]
    if len(p) != len(names):
        raise InvalidOrderError(f"order has {len(names)} index tuples but the point has {len(p)} coordinates")
    for name in names:
        if name not in p:
            raise MissingCoordinateError(f"point misses coordinate {name}")
    return [p[name] for name in names]


def split(p: ZPoint, order: SplitOrder, logger: logging.Logger | None = None) -> Dict[str, Element]:
    """Split a point along an order.

    :param p: the values of all ``2**n`` Z coordinates.
    :param order: the order; its first tuple keeps its coordinate.
    :returns: the split point, keyed like ``p``.
    :raises InvalidOrderError: if the order and the point differ in size.
    :raises MissingCoordinateError: if the point misses a coordinate of the order.
    """
    logger = logger or _logger
    values = _coordinates(p, order)
    logger.debug(f"splitting along order {order.describe()}")

    q: Dict[str, Element] = {}
    uncovered = values[0] | ~values[0]
    for alpha, value in zip(order.alphas, values):
        q[z_name(alpha)] = value & uncovered
        uncovered = uncovered & ~value
    return q


def splitting_violations(p: ZPoint, q: ZPoint, order: SplitOrder) -> List[str]:
    """List the splitting properties a pair of points violates.

    The properties are: the first coordinate is kept, every coordinate
    shrinks, the coordinates are pairwise disjoint, the join of all
    coordinates is kept, and the join of every prefix of the order is kept.

    :returns: one message per violated property, empty when all hold.
    """
    before = _coordinates(p, order)
    after = _coordinates(q, order)
    names = [z_name(alpha) for alpha in order.alphas]
    violations: List[str] = []

    if after[0] != before[0]:
        violations.append(f"first coordinate {names[0]} changed")
    for name, x, y in zip(names, before, after):
        if not y <= x:
            violations.append(f"{name}: {format_element(y)} is not below {format_element(x)}")
    for i, (name_i, y_i) in enumerate(zip(names, after)):
        for name_j, y_j in zip(names[i + 1 :], after[i + 1 :]):
            if not (y_i & y_j).is_zero:
                violations.append(f"{name_i} and {name_j} are not disjoint")
    if supremum_finite(before) != supremum_finite(after):
        violations.append("join of all coordinates changed")
    for k in range(1, len(names) + 1):
        if supremum_finite(before[:k]) != supremum_finite(after[:k]):
            violations.append(f"join of the coordinates up to {names[k - 1]} changed")
    return violations


def canonical_violations(cs: CanonicalSystem, point: ZPoint, relaxed: bool = False) -> List[str]:
    """List the constraints of a canonical system a Z point violates.

    :param cs: the canonical system.
    :param point: the Z point.
    :param relaxed: leave out the pairwise disjointness constraints.
    :returns: the violated constraints in text form, empty when the point is a solution.
    """
    names = cs.z_variables
    for name in names:
        if name not in point:
            raise MissingCoordinateError(f"point misses coordinate {name}")

    violations: List[str] = []
    for alpha, name in zip(cs.alphas, names):
        if not point[name] <= cs.bound(alpha):
            violations.append(f"{name} <= {format_element(cs.bound(alpha))}")
    if not relaxed:
        for i, first in enumerate(names):
            for second in names[i + 1 :]:
                if not (point[first] & point[second]).is_zero:
                    violations.append(f"{first} * {second} = 0")
    if not supremum_finite([point[name] for name in names]).is_one:
        violations.append(" + ".join(names) + " = 1")
    return violations


def split_solves(
    cs: CanonicalSystem,
    p: ZPoint,
    order: SplitOrder | None = None,
    logger: logging.Logger | None = None,
) -> Dict[str, Element]:
    """Turn a solution of the relaxed canonical system into a full solution.

    The relaxed system keeps the bounds and the cover but not the
    disjointness; splitting restores it without breaking the others.

    :param cs: the canonical system.
    :param p: a point meeting every bound and joining to 1.
    :param order: the splitting order, lexicographic by default.
    :raises PreconditionError: if ``p`` does not solve the relaxed system;
        the error names the first failing constraint.
    """
    order = order or SplitOrder.lexicographic(cs.n)
    failing = canonical_violations(cs, p, relaxed=True)
    if failing:
        message = f"point does not solve the relaxed system: {failing[0]}"
        raise PreconditionError(message, constraint=failing[0])

    q = split(p, order, logger=logger)
    remaining = canonical_violations(cs, q)
    assert not remaining, f"split point violates {remaining}"
    return q


def raise_coordinate(p: ZPoint, alpha: Alpha, x0: Element) -> Dict[str, Element]:
    """Get a copy of ``p`` with coordinate ``alpha`` joined with ``x0``.

    :raises MissingCoordinateError: if ``p`` has no coordinate ``alpha``.
    """
    name = z_name(alpha)
    if name not in p:
        raise MissingCoordinateError(f"point misses coordinate {name}")
    raised = dict(p)
    raised[name] = p[name] | x0
    return raised


def bound_point(cs: CanonicalSystem) -> Dict[str, Element]:
    """Get the point whose coordinates are the merged bounds of a canonical system."""
    return {z_name(alpha): cs.bound(alpha) for alpha in cs.alphas}
