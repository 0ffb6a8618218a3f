# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for deciding whether C is complete in its host algebra.

C is complete in B when every subset of C has an infimum in B that lies in
C. Finite algebras and finite C always pass. For an infinite C inside the
finite-cofinite algebra the check looks for a family of sparse singletons
(all naturals of one parity above a threshold) inside C; such a family has
no supremum, which is verified by a bounded descent over candidate upper
bounds.
"""

from __future__ import annotations

__all__ = [
    "CompletenessVerdict",
    "SparseSingletonFamily",
    "bounded_infimum",
    "find_sparse_singleton_family",
    "is_complete_in",
    "verify_no_supremum",
]

import dataclasses
import logging
from typing import Dict, Optional, Sequence

from boolgeo.common.config import DEFAULT_CERTIFICATE_BOUND, DEFAULT_SURVIVOR_WINDOW
from boolgeo.common.verdict import Verdict

from .boolean_algebra import FiniteCofiniteAlgebra, format_element
from .calgebra import CAlgebra
from .elements import FiniteCofiniteElement

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(kw_only=True, frozen=True)
class CompletenessVerdict:
    """The answer to "is C complete in B".

    :ivar verdict: yes, no or unknown.
    :vartype verdict: Verdict
    :ivar bound: the search bound used for a bounded answer, 0 when exact.
    :vartype bound: int
    :ivar evidence: human readable evidence, by key.
    :vartype evidence: Dict[str, str]
    """

    verdict: Verdict
    bound: int = 0
    evidence: Dict[str, str] = dataclasses.field(default_factory=dict)


@dataclasses.dataclass(kw_only=True, frozen=True)
class SparseSingletonFamily:
    """The singletons ``{j}`` with ``j ≡ parity (mod 2)`` and ``j >= threshold``."""

    parity: int
    threshold: int

    def member(self: SparseSingletonFamily, k: int) -> FiniteCofiniteElement:
        """Get the ``k``-th singleton of the family."""
        first = self.threshold + (self.threshold - self.parity) % 2
        return FiniteCofiniteElement(cofinite=False, members=frozenset([first + 2 * k]))

    def contains_natural(self: SparseSingletonFamily, j: int) -> bool:
        """Check if ``{j}`` is a member."""
        return j >= self.threshold and j % 2 == self.parity

    def describe(self: SparseSingletonFamily) -> str:
        """Get a short description, e.g. ``even-singletons from 0``."""
        name = "even" if self.parity == 0 else "odd"
        return f"{name}-singletons from {self.threshold}"


def find_sparse_singleton_family(calg: CAlgebra, probe: int) -> Optional[SparseSingletonFamily]:
    """Find a family of sparse singletons that lies in C.

    The first ``probe`` singletons of each candidate family are tested for
    membership in C; the even family is preferred.

    :param calg: a C-algebra over the finite-cofinite algebra.
    :param probe: how many members of a candidate family are tested.
    """
    for threshold in range(0, probe):
        for parity in (0, 1):
            family = SparseSingletonFamily(parity=parity, threshold=threshold)
            if all(calg.contains(family.member(k)) for k in range(probe)):
                return family
    return None


def _is_upper_bound(u: FiniteCofiniteElement, family: SparseSingletonFamily) -> bool:
    # a finite set misses a member beyond its largest natural
    if not u.cofinite:
        return False
    return not any(family.contains_natural(j) for j in u.members)


def verify_no_supremum(family: SparseSingletonFamily, window: int) -> Dict[str, int]:
    """Check that no element with payload in ``0..window-1`` is the supremum of the family.

    For every candidate that is an upper bound, a strictly smaller upper
    bound is produced by removing a natural that is not a family member.
    The membership checks are done with the algebra operations.

    :returns: the number of candidates checked and of upper bounds refuted.
    :raises AssertionError: if a candidate upper bound has no smaller one.
    """
    algebra = FiniteCofiniteAlgebra()
    checked = 0
    refuted = 0
    for u in algebra.window_elements(window):
        checked += 1
        if not _is_upper_bound(u, family):
            # a finite set is not above the member past its payload
            if not u.cofinite:
                beyond = family.member(max(u.members, default=0) + 1)
                assert not beyond <= u, f"{format_element(u)} unexpectedly bounds {format_element(beyond)}"
            continue
        j = next(j for j in range(window + 2) if j not in u.members and not family.contains_natural(j))
        smaller = u & ~algebra.finite([j])
        assert smaller != u and smaller <= u, f"{format_element(smaller)} is not below {format_element(u)}"
        assert _is_upper_bound(smaller, family), f"{format_element(smaller)} is not an upper bound"
        refuted += 1
    return {"checked": checked, "refuted": refuted}


def bounded_infimum(
    members: Sequence[FiniteCofiniteElement],
    window: int,
) -> Optional[FiniteCofiniteElement]:
    """Search the greatest lower bound of the first members of a family among the window elements.

    The answer is exact only for families whose later members cannot exclude
    more window candidates, such as descending chains ``N - {0..n}``.

    :returns: the greatest window element below every given member, ``None``
        if the lower bounds have no greatest element.
    """
    algebra = FiniteCofiniteAlgebra()
    lower_bounds = [x for x in algebra.window_elements(window) if all(x <= m for m in members)]
    for candidate in lower_bounds:
        if all(x <= candidate for x in lower_bounds):
            return candidate
    return None


def _family_infima(calg: CAlgebra, horizon: int, window: int) -> Dict[str, str]:
    """Get the infimum of each infinite family, checked by a bounded search when it lies in the window."""
    infima: Dict[str, str] = {}
    for family in calg.families:
        if not family.is_infinite:
            continue
        infimum = family.infimum()
        if not infimum.cofinite and all(j < window for j in infimum.members):
            members = [family.member(n) for n in family.indices(max(horizon, 2))]
            found = bounded_infimum(members, window)
            assert found == infimum, f"{family.describe()}: search disagrees with {format_element(infimum)}"
        infima[f"infimum {family.prefix}"] = format_element(infimum)
    return infima


def is_complete_in(
    calg: CAlgebra,
    bound: int = DEFAULT_CERTIFICATE_BOUND,
    window: int = DEFAULT_SURVIVOR_WINDOW,
    logger: logging.Logger | None = None,
) -> CompletenessVerdict:
    """Decide, possibly up to a bound, whether C is complete in B.

    :param calg: the C-algebra.
    :param bound: how many family members are probed for membership in C.
    :param window: the payload window of the candidate upper bounds.
    :param logger: the logger to use.
    """
    logger = logger or _logger
    if calg.algebra.is_finite:
        return CompletenessVerdict(
            verdict=Verdict.YES,
            evidence={"reason": "finite algebra, every subset has an iterated-meet infimum"},
        )
    if not calg.is_schematic:
        return CompletenessVerdict(
            verdict=Verdict.YES,
            evidence={"reason": "C is finite", "|C|": str(calg.c_size)},
        )

    probe = min(bound, 2 * calg.term_depth_bound)
    width = min(window, bound)
    family = find_sparse_singleton_family(calg, probe)
    if family is None:
        logger.warning(f"no sparse singleton family found in C of {calg.name} within {probe} members")
        infima = _family_infima(calg, probe, width)
        return CompletenessVerdict(verdict=Verdict.UNKNOWN, bound=probe, evidence=infima)

    counts = verify_no_supremum(family, width)
    logger.info(f"{family.describe()} has no supremum in {calg.name}, {counts['refuted']} bounds refuted")
    return CompletenessVerdict(
        verdict=Verdict.NO,
        bound=width,
        evidence={
            "family": family.describe(),
            "reason": "every upper bound has a strictly smaller upper bound",
            "candidates": str(counts["checked"]),
            "refuted": str(counts["refuted"]),
            **_family_infima(calg, probe, width),
        },
    )
