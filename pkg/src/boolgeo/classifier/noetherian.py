# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the Noetherian and compactness classification of C-algebras.

A Boolean C-algebra is equationally Noetherian iff its subalgebra of
constants C is finite, and weakly equationally Noetherian iff C is complete
in the host algebra. For Boolean algebras the consistent variant coincides
with the plain one. Compactness is only answered where it follows from
these criteria or from a verified E_k fixture.
"""

from __future__ import annotations

__all__ = [
    "classify",
    "classify_compactness",
    "classify_consistently_noetherian",
    "classify_noetherian",
    "classify_weakly_noetherian",
]

import dataclasses
import logging
from typing import List, Tuple

from boolgeo.algebra import CAlgebra, format_element, is_complete_in
from boolgeo.common import Verdict
from boolgeo.common.config import DEFAULT_CERTIFICATE_BOUND, DEFAULT_SURVIVOR_WINDOW, DEFAULT_TERM_DEPTH_BOUND

from .certificate import verify_ek_fixture
from .fixtures import BUILTIN_FIXTURES, builtin_fixture
from .verdicts import AlgebraClass, ClassVerdict

_logger = logging.getLogger(__name__)


def classify_noetherian(
    calg: CAlgebra,
    chain_length: int = DEFAULT_TERM_DEPTH_BOUND,
    logger: logging.Logger | None = None,
) -> ClassVerdict:
    """Decide whether a C-algebra is equationally Noetherian.

    :param calg: the C-algebra.
    :param chain_length: the length of the increasing chain of constants
        reported as evidence when C is infinite.
    :param logger: the logger to use.
    """
    logger = logger or _logger
    if not calg.is_schematic:
        logger.info(f"{calg.name}: C has {calg.c_size} elements, equationally Noetherian")
        return ClassVerdict(
            algebra_class=AlgebraClass.N,
            verdict=Verdict.YES,
            evidence={"|C|": str(calg.c_size), "reason": "C is finite"},
        )

    chain = calg.chain_evidence(chain_length)
    logger.info(f"{calg.name}: C is infinite, not equationally Noetherian")
    return ClassVerdict(
        algebra_class=AlgebraClass.N,
        verdict=Verdict.NO,
        evidence={
            "reason": "C is infinite, x >= c for every c in the chain has no equivalent finite subsystem",
            "chain": " < ".join(format_element(c) for c in chain) + " < ...",
        },
    )


def classify_consistently_noetherian(
    calg: CAlgebra,
    chain_length: int = DEFAULT_TERM_DEPTH_BOUND,
    logger: logging.Logger | None = None,
) -> ClassVerdict:
    """Decide whether a C-algebra is consistently Noetherian.

    For Boolean C-algebras this is the same as equationally Noetherian.
    """
    verdict = classify_noetherian(calg, chain_length=chain_length, logger=logger)
    evidence = {**verdict.evidence, "equivalence": "consistently Noetherian iff equationally Noetherian"}
    return dataclasses.replace(verdict, algebra_class=AlgebraClass.N_C, evidence=evidence)


def classify_weakly_noetherian(
    calg: CAlgebra,
    bound: int = DEFAULT_CERTIFICATE_BOUND,
    window: int = DEFAULT_SURVIVOR_WINDOW,
    logger: logging.Logger | None = None,
) -> ClassVerdict:
    """Decide, possibly up to a bound, whether a C-algebra is weakly equationally Noetherian."""
    completeness = is_complete_in(calg, bound=bound, window=window, logger=logger)
    return ClassVerdict(
        algebra_class=AlgebraClass.N_PRIME,
        verdict=completeness.verdict,
        bound=completeness.bound,
        evidence=dict(completeness.evidence),
    )


def classify_compactness(
    calg: CAlgebra,
    bound: int = DEFAULT_CERTIFICATE_BOUND,
    window: int = DEFAULT_SURVIVOR_WINDOW,
    logger: logging.Logger | None = None,
) -> Tuple[ClassVerdict, ClassVerdict]:
    """Get the q-compactness and u-compactness verdicts of a C-algebra.

    A finite C makes the algebra Noetherian, hence both. Otherwise every
    built-in fixture whose constant families the algebra declares is
    checked over it; a passing E_0 or E_1 certificate rules out both.

    :returns: the verdicts for Q and U, in that order.
    """
    logger = logger or _logger
    if not calg.is_schematic:
        evidence = {"reason": "C is finite, equationally Noetherian algebras are u-compact and q-compact"}
        return (
            ClassVerdict(algebra_class=AlgebraClass.Q, verdict=Verdict.YES, evidence=evidence),
            ClassVerdict(algebra_class=AlgebraClass.U, verdict=Verdict.YES, evidence=evidence),
        )

    for name in sorted(BUILTIN_FIXTURES):
        fixture = builtin_fixture(name, logger=logger)
        if not set(fixture.calg.families) <= set(calg.families):
            continue
        certificate = verify_ek_fixture(fixture.with_algebra(calg), bound=bound, window=window, logger=logger)
        if not certificate.passed:
            logger.warning(f"{calg.name}: fixture {name} applies but its certificate fails")
            continue
        evidence = {
            "fixture": name,
            "reason": f"an E_{certificate.k}-system exists, verified up to {bound}",
        }
        logger.info(f"{calg.name}: E_{certificate.k} fixture {name} passes, neither q- nor u-compact")
        return (
            ClassVerdict(algebra_class=AlgebraClass.Q, verdict=Verdict.NO, bound=bound, evidence=evidence),
            ClassVerdict(algebra_class=AlgebraClass.U, verdict=Verdict.NO, bound=bound, evidence=evidence),
        )

    logger.warning(f"{calg.name}: no applicable E_k fixture, compactness is unknown")
    evidence = {"reason": "C is infinite and no built-in E_k fixture applies"}
    return (
        ClassVerdict(algebra_class=AlgebraClass.Q, verdict=Verdict.UNKNOWN, bound=bound, evidence=evidence),
        ClassVerdict(algebra_class=AlgebraClass.U, verdict=Verdict.UNKNOWN, bound=bound, evidence=evidence),
    )


def classify(
    calg: CAlgebra,
    bound: int = DEFAULT_CERTIFICATE_BOUND,
    window: int = DEFAULT_SURVIVOR_WINDOW,
    logger: logging.Logger | None = None,
) -> List[ClassVerdict]:
    """Get the verdicts for every class, in the order N, N', N_c, Q, U."""
    q_verdict, u_verdict = classify_compactness(calg, bound=bound, window=window, logger=logger)
    return [
        classify_noetherian(calg, logger=logger),
        classify_weakly_noetherian(calg, bound=bound, window=window, logger=logger),
        classify_consistently_noetherian(calg, logger=logger),
        q_verdict,
        u_verdict,
    ]
