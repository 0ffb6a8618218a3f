# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for bounded certificates of E_k fixtures.

A certificate checks two things up to a bound ``N``:

* every prefix of up to ``N`` rounds of equations has at least ``N``
  distinct solutions, found by moving single naturals between the
  coordinates of a split solution;
* the declared solutions satisfy the equations up to the bound, and in the
  window of elements whose payload lies in ``{0..w-1}`` nothing else does.
"""

from __future__ import annotations

__all__ = [
    "EkCertificate",
    "verify_ek_fixture",
]

import dataclasses
import itertools
import logging
from typing import Dict, Iterator, List, Set, Tuple

from boolgeo.algebra import Element, FiniteCofiniteAlgebra, FiniteCofiniteElement, format_element
from boolgeo.common import FixtureRejectedError
from boolgeo.common.config import (
    DEFAULT_CERTIFICATE_BOUND,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_SURVIVOR_WINDOW,
)
from boolgeo.normalizer import CanonicalSystem, canonicalize_system, x_from_z
from boolgeo.solver import consistency_witness, point_key
from boolgeo.splitting import raise_coordinate
from boolgeo.syntax import Equation, format_equation, satisfies, satisfies_all, z_name

from .fixtures import EkFixture

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(kw_only=True, frozen=True)
class EkCertificate:
    """The outcome of checking an E_k fixture up to a bound.

    :ivar name: the fixture name.
    :vartype name: str
    :ivar k: the declared number of solutions.
    :vartype k: int
    :ivar bound: the number of rounds and of solutions per prefix required.
    :vartype bound: int
    :ivar window: the payload window of the survivor check.
    :vartype window: int
    :ivar prefix_counts: for each prefix length ``1..bound``, the number of
        distinct solutions found (the search stops at ``bound``).
    :vartype prefix_counts: Tuple[int, ...]
    :ivar survivors: the window elements satisfying every equation up to the bound.
    :vartype survivors: Tuple[Dict[str, Element], ...]
    :ivar failures: one line per violated clause, empty when the certificate passes.
    :vartype failures: Tuple[str, ...]
    """

    name: str
    k: int
    bound: int
    window: int
    prefix_counts: Tuple[int, ...] = ()
    survivors: Tuple[Dict[str, Element], ...] = ()
    failures: Tuple[str, ...] = ()

    @property
    def passed(self: EkCertificate) -> bool:
        """Check if every clause holds."""
        return not self.failures


def _largest_natural(cs: CanonicalSystem) -> int:
    naturals = [
        max(bound.members)
        for bound in (cs.bound(alpha) for alpha in cs.alphas)
        if isinstance(bound, FiniteCofiniteElement) and bound.members
    ]
    return max(naturals, default=0)


def _moved_solutions(
    cs: CanonicalSystem, base: Dict[str, Element], horizon: int
) -> Iterator[Dict[str, Element]]:
    """Yield the split solution and every solution one natural away from it.

    Natural ``j`` sits in exactly one coordinate of a split solution; moving
    it to any other coordinate whose bound contains ``j`` keeps the point a
    solution of the canonical system.
    """
    algebra = cs.calg.algebra
    assert isinstance(algebra, FiniteCofiniteAlgebra)
    yield base
    for j in range(horizon):
        single = algebra.finite([j])
        holder = next(a for a in cs.alphas if single <= base[z_name(a)])
        for target in cs.alphas:
            target_bound = cs.bound(target)
            if target == holder or not (single <= target_bound):
                continue
            lowered = dict(base)
            lowered[z_name(holder)] = base[z_name(holder)] & ~single
            yield raise_coordinate(lowered, target, single)


def _prefix_solutions(fixture: EkFixture, m: int, wanted: int, logger: logging.Logger) -> Tuple[int, str]:
    prefix = fixture.system.prefix(m)
    variables = list(prefix.variables)
    cs = canonicalize_system(prefix, fixture.calg, logger=logger)
    base = consistency_witness(cs)
    if base is None:
        return 0, f"(a) prefix {m} is inconsistent"

    horizon = _largest_natural(cs) + 2 * wanted + 2
    seen: Set[Tuple] = set()
    for z_point in _moved_solutions(cs, base, horizon):
        x_point = x_from_z(z_point, variables, fixture.calg.algebra)
        assert satisfies_all(x_point, prefix.equations, fixture.calg), f"moved point fails prefix {m}"
        seen.add(point_key(x_point, variables))
        if len(seen) >= wanted:
            return len(seen), ""
    return len(seen), f"(a) prefix {m}: only {len(seen)} solutions found, {wanted} required"


def _window_width(n: int, window: int, bound: int, budget: int) -> int:
    width = max(0, min(bound - 1, window))
    # each variable ranges over 2**(width+1) window elements
    while width > 0 and 1 << ((width + 1) * n) > budget:
        width -= 1
    return width


def _in_window(point: Dict[str, Element], width: int) -> bool:
    return all(
        isinstance(value, FiniteCofiniteElement) and all(j < width for j in value.members)
        for value in point.values()
    )


def _format_point(point: Dict[str, Element], variables: List[str]) -> str:
    return " ".join(f"{v}={format_element(point[v])}" for v in variables)


def _survivors(
    variables: List[str],
    equations: Tuple[Equation, ...],
    fixture: EkFixture,
    width: int,
) -> List[Dict[str, Element]]:
    algebra = fixture.calg.algebra
    assert isinstance(algebra, FiniteCofiniteAlgebra)
    elements = list(algebra.window_elements(width))
    points = itertools.product(elements, repeat=len(variables))
    survivors = [dict(zip(variables, values)) for values in points]
    for equation in equations:
        survivors = [p for p in survivors if satisfies(p, equation, fixture.calg)]
    return survivors


def verify_ek_fixture(
    fixture: EkFixture,
    bound: int = DEFAULT_CERTIFICATE_BOUND,
    window: int = DEFAULT_SURVIVOR_WINDOW,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    logger: logging.Logger | None = None,
) -> EkCertificate:
    """Check an E_k fixture up to a bound.

    :param fixture: the fixture.
    :param bound: the number of prefix rounds checked and the number of
        solutions each prefix must exhibit.
    :param window: the largest payload window of the survivor check.
    :param budget: the largest number of window points tried.
    :param logger: the logger to use.
    :raises FixtureRejectedError: if the algebra has a finite C, or the
        system is finite; neither admits an E_k-system.
    """
    logger = logger or _logger
    calg = fixture.calg
    if not calg.is_schematic:
        raise FixtureRejectedError(
            f"C of {calg.name} is finite, so the algebra is equationally Noetherian and has no E_k-systems"
        )
    if not fixture.system.is_schematic:
        raise FixtureRejectedError(f"fixture {fixture.name} is a finite system, its own finite subsystem")
    assert bound > 0, f"certificate bound must be positive, got {bound}"

    failures: List[str] = []
    counts: List[int] = []
    for m in range(1, bound + 1):
        count, failure = _prefix_solutions(fixture, m, bound, logger)
        logger.debug(f"{fixture.name}: prefix {m} has at least {count} solutions")
        counts.append(count)
        if failure:
            failures.append(failure)

    variables = list(fixture.system.variables)
    full = fixture.system.prefix(bound)
    for solution in fixture.solutions:
        for equation in full.equations:
            if not satisfies(solution, equation, calg):
                failures.append(
                    f"(b) declared solution {_format_point(solution, variables)} "
                    f"violates {format_equation(equation)}"
                )
                break

    width = _window_width(len(variables), window, bound, budget)
    survivors = _survivors(variables, full.equations, fixture, width)
    declared = {point_key(s, variables) for s in fixture.solutions if _in_window(s, width)}
    found = {point_key(s, variables) for s in survivors}
    for survivor in survivors:
        if point_key(survivor, variables) not in declared:
            failures.append(f"(b) undeclared survivor {_format_point(survivor, variables)} in window {width}")
    for solution in fixture.solutions:
        if _in_window(solution, width) and point_key(solution, variables) not in found:
            failures.append(f"(b) declared solution {_format_point(solution, variables)} does not survive")

    if failures:
        logger.warning(f"{fixture.name}: certificate fails with {len(failures)} violated clauses")
    else:
        logger.info(f"{fixture.name}: certificate passes up to {bound}, {len(survivors)} survivors")
    return EkCertificate(
        name=fixture.name,
        k=fixture.k,
        bound=bound,
        window=width,
        prefix_counts=tuple(counts),
        survivors=tuple(survivors),
        failures=tuple(failures),
    )
