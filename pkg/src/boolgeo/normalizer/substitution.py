# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the change of variables between X-space and Z-space.

For variables ``x1..xn`` there is one Z variable ``z(a1,...,an)`` per tuple
of 0/1 indices. The Z variable of a tuple is the meet of the ``x_i`` with
``a_i = 1`` and the complements of the others; ``x_i`` is the join of all
Z variables whose ``i``-th index is 1.
"""

from __future__ import annotations

__all__ = [
    "Alpha",
    "all_tuples",
    "parse_alpha",
    "x_from_z",
    "x_term",
    "z_from_x",
    "z_term",
    "z_variables",
]

import functools
import itertools
import re
from typing import Dict, List, Mapping, Sequence, Tuple

from boolgeo.algebra import BooleanAlgebra, Element
from boolgeo.common import MissingCoordinateError
from boolgeo.syntax import Join, Meet, Not, Term, Var, z_name

Alpha = Tuple[int, ...]
"""A tuple of 0/1 indices."""

ALPHA_REGEX = re.compile(r"^z\((?P<bits>[01](?:,[01])*)\)$")


def all_tuples(n: int) -> List[Alpha]:
    """Get all ``2**n`` index tuples in lexicographic order."""
    return list(itertools.product((0, 1), repeat=n))


def z_variables(n: int) -> List[str]:
    """Get the Z variable names for ``n`` X variables, in lexicographic order."""
    return [z_name(alpha) for alpha in all_tuples(n)]


def parse_alpha(name: str) -> Alpha:
    """Get the index tuple of a Z variable name such as ``z(0,1)``.

    :raises ValueError: if the name is not a Z variable.
    """
    match = ALPHA_REGEX.match(name.replace(" ", ""))
    if match is None:
        raise ValueError(f"'{name}' is not a Z variable name")
    return tuple(int(b) for b in match.group("bits").split(","))


def x_from_z(
    z_point: Mapping[str, Element],
    variables: Sequence[str],
    algebra: BooleanAlgebra,
) -> Dict[str, Element]:
    """Map a Z-space point to X-space.

    ``x_i`` is the join of the ``z(α)`` whose ``i``-th index is 1.

    :param z_point: the values of all ``2**n`` Z variables.
    :param variables: the X variables, in order.
    :param algebra: the algebra the point lives in.
    :raises MissingCoordinateError: if a Z coordinate is missing.
    """
    n = len(variables)
    for alpha in all_tuples(n):
        if z_name(alpha) not in z_point:
            raise MissingCoordinateError(f"Z point misses coordinate {z_name(alpha)}")

    x_point: Dict[str, Element] = {}
    for i, variable in enumerate(variables):
        value = algebra.zero()
        for alpha in all_tuples(n):
            if alpha[i] == 1:
                value = value | z_point[z_name(alpha)]
        x_point[variable] = value
    return x_point


def z_from_x(
    x_point: Mapping[str, Element],
    variables: Sequence[str],
    algebra: BooleanAlgebra,
) -> Dict[str, Element]:
    """Map an X-space point to Z-space.

    ``z(α)`` is the meet over ``i`` of ``x_i`` if ``α_i = 1`` and of its
    complement otherwise; the result is pairwise disjoint and covers 1.

    :raises MissingCoordinateError: if an X coordinate is missing.
    """
    for variable in variables:
        if variable not in x_point:
            raise MissingCoordinateError(f"X point misses coordinate {variable}")

    z_point: Dict[str, Element] = {}
    for alpha in all_tuples(len(variables)):
        value = algebra.one()
        for a, variable in zip(alpha, variables):
            value = value & (x_point[variable] if a == 1 else ~x_point[variable])
        z_point[z_name(alpha)] = value
    return z_point


def z_term(alpha: Alpha, variables: Sequence[str]) -> Term:
    """Get the X-space term of a Z variable, e.g. ``~x1 * x2 * x3`` for ``z(0,1,1)``."""
    assert len(alpha) == len(variables) and len(alpha) > 0, "index tuple and variables differ in length"
    literals: List[Term] = [Var(v) if a == 1 else Not(Var(v)) for a, v in zip(alpha, variables)]
    return functools.reduce(Meet, literals[1:], literals[0])


def x_term(i: int, n: int) -> Term:
    """Get the Z-space term of ``x_(i+1)``, the join of the Z variables with index ``i`` set."""
    zs: List[Term] = [Var(z_name(alpha)) for alpha in all_tuples(n) if alpha[i] == 1]
    return functools.reduce(Join, zs[1:], zs[0])
