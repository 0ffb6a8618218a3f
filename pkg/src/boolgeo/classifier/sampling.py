# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for seeded sampling of systems and quasi-identities.

The sampling harnesses compare two C-algebras that share their constants:
geometrically equivalent algebras give every system the same radical and
satisfy the same quasi-identities.
"""

from __future__ import annotations

__all__ = [
    "AgreementReport",
    "RandomSystemGenerator",
    "sample_quasi_identity_agreement",
    "sample_radical_agreement",
]

import dataclasses
import logging
import random
from typing import Callable, List, Sequence, Set, Tuple, TypeVar

from boolgeo.algebra import CAlgebra
from boolgeo.common.config import (
    DEFAULT_BLOWUP_LIMIT,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_QI_MAX_PREMISES,
    DEFAULT_QI_SAMPLES,
    DEFAULT_QI_TERM_DEPTH,
    DEFAULT_SEED,
)
from boolgeo.solver import radical_member
from boolgeo.syntax import (
    Const,
    Equation,
    Join,
    Meet,
    Not,
    One,
    QuasiIdentity,
    Relation,
    System,
    Term,
    Var,
    Zero,
    format_equation,
    format_quasi_identity,
)

from .geometric import check_shared_constants
from .quasi_identities import evaluate_quasi_identity

_logger = logging.getLogger(__name__)

MAX_ATTEMPTS: int = 100
"""Number of redraws tried before a duplicate sample is accepted."""

DEFAULT_VARIABLES: Tuple[str, ...] = ("x1", "x2")
"""Variables of sampled systems."""

T = TypeVar("T")


class RandomSystemGenerator:
    """Utility class to generate random terms, equations, systems and quasi-identities.

    The generator is fully determined by its seed. It keeps track of the
    systems and quasi-identities it produced and redraws duplicates.
    """

    def __init__(
        self: RandomSystemGenerator,
        variables: Sequence[str] = DEFAULT_VARIABLES,
        constants: Sequence[str] = (),
        seed: int = DEFAULT_SEED,
        max_depth: int = DEFAULT_QI_TERM_DEPTH,
        logger: logging.Logger | None = None,
    ) -> None:
        """Initialise the generator.

        :param variables: the variables terms may use.
        :param constants: the constant names terms may use.
        :param seed: the seed of the random number generator.
        :param max_depth: the largest depth of a generated term.
        :param logger: the logger to use.
        """
        assert len(variables) > 0, "at least one variable is needed"
        self.variables = list(variables)
        self.constants = list(constants)
        self.max_depth = max_depth
        self.logger = logger or logging.getLogger(__name__)
        self._random = random.Random(seed)
        self._previous: Set[str] = set()
        self.logger.debug(f"sampling with seed {seed}, {len(self.constants)} constants")

    def _leaf(self: RandomSystemGenerator) -> Term:
        choice = self._random.random()
        if choice < 0.1:
            return Zero()
        if choice < 0.2:
            return One()
        if self.constants and choice < 0.5:
            return Const(self._random.choice(self.constants))
        return Var(self._random.choice(self.variables))

    def term(self: RandomSystemGenerator, depth: int | None = None) -> Term:
        """Generate a term of at most the given depth."""
        depth = self.max_depth if depth is None else depth
        if depth <= 0 or self._random.random() < 0.3:
            return self._leaf()
        choice = self._random.randrange(3)
        if choice == 0:
            return Not(self.term(depth - 1))
        if choice == 1:
            return Join(self.term(depth - 1), self.term(depth - 1))
        return Meet(self.term(depth - 1), self.term(depth - 1))

    def equation(self: RandomSystemGenerator) -> Equation:
        """Generate an equation or inequality."""
        relation = self._random.choice([Relation.EQ, Relation.LEQ])
        return Equation(self.term(), self.term(), relation)

    def _unique(self: RandomSystemGenerator, draw: Callable[[], T], text: Callable[[T], str]) -> T:
        sample = draw()
        attempts = 1
        while text(sample) in self._previous and attempts < MAX_ATTEMPTS:
            sample = draw()
            attempts += 1

        self._previous.add(text(sample))
        return sample

    def system(self: RandomSystemGenerator, max_equations: int = 2) -> System:
        """Generate a finite system of ``1..max_equations`` equations over all the variables."""

        def _draw() -> System:
            count = self._random.randint(1, max_equations)
            return System(tuple(self.variables), tuple(self.equation() for _ in range(count)))

        return self._unique(_draw, lambda s: "; ".join(format_equation(e) for e in s.equations))

    def quasi_identity(
        self: RandomSystemGenerator, max_premises: int = DEFAULT_QI_MAX_PREMISES
    ) -> QuasiIdentity:
        """Generate a quasi-identity with ``0..max_premises`` premises."""

        def _draw() -> QuasiIdentity:
            count = self._random.randint(0, max_premises)
            premises = tuple(self.equation() for _ in range(count))
            return QuasiIdentity(premises=premises, conclusion=self.equation())

        return self._unique(_draw, format_quasi_identity)


@dataclasses.dataclass(kw_only=True, frozen=True)
class AgreementReport:
    """The outcome of comparing two C-algebras on sampled inputs.

    :ivar checked: the number of comparisons made.
    :vartype checked: int
    :ivar seed: the seed the samples were drawn with.
    :vartype seed: int
    :ivar mismatches: one line per input on which the algebras disagree.
    :vartype mismatches: Tuple[str, ...]
    """

    checked: int
    seed: int
    mismatches: Tuple[str, ...] = ()

    @property
    def agrees(self: AgreementReport) -> bool:
        """Check if there were no mismatches."""
        return not self.mismatches


def _constant_names(calg: CAlgebra) -> List[str]:
    return [name for name, _ in calg.generators()]


def sample_radical_agreement(
    first: CAlgebra,
    second: CAlgebra,
    samples: int = DEFAULT_QI_SAMPLES,
    candidates_per_system: int = 5,
    seed: int = DEFAULT_SEED,
    variables: Sequence[str] = DEFAULT_VARIABLES,
    max_depth: int = DEFAULT_QI_TERM_DEPTH,
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT,
    logger: logging.Logger | None = None,
) -> AgreementReport:
    """Compare radical membership verdicts of sampled systems and candidates in two algebras.

    :raises NonIsomorphicConstantsError: if the algebras do not share their constants.
    """
    logger = logger or _logger
    check_shared_constants(first, second)
    generator = RandomSystemGenerator(
        variables, _constant_names(first), seed=seed, max_depth=max_depth, logger=logger
    )
    checked = 0
    mismatches: List[str] = []
    for _ in range(samples):
        system = generator.system()
        for _ in range(candidates_per_system):
            candidate = generator.equation()
            in_first = radical_member(system, candidate, first, blowup_limit=blowup_limit, logger=logger)
            in_second = radical_member(system, candidate, second, blowup_limit=blowup_limit, logger=logger)
            checked += 1
            if in_first.kind != in_second.kind:
                equations = "; ".join(format_equation(e) for e in system.equations)
                mismatches.append(
                    f"{equations} |- {format_equation(candidate)}: "
                    f"{in_first.kind.value} in {first.name}, {in_second.kind.value} in {second.name}"
                )

    logger.info(f"{checked} radical queries compared, {len(mismatches)} mismatches")
    return AgreementReport(checked=checked, seed=seed, mismatches=tuple(mismatches))


def sample_quasi_identity_agreement(
    first: CAlgebra,
    second: CAlgebra,
    samples: int = DEFAULT_QI_SAMPLES,
    seed: int = DEFAULT_SEED,
    variables: Sequence[str] = DEFAULT_VARIABLES,
    max_premises: int = DEFAULT_QI_MAX_PREMISES,
    max_depth: int = DEFAULT_QI_TERM_DEPTH,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    logger: logging.Logger | None = None,
) -> AgreementReport:
    """Compare the truth values of sampled quasi-identities in two finite algebras.

    :raises NonIsomorphicConstantsError: if the algebras do not share their constants.
    :raises UnsupportedAlgebraError: if either algebra is not finite.
    """
    logger = logger or _logger
    check_shared_constants(first, second)
    generator = RandomSystemGenerator(
        variables, _constant_names(first), seed=seed, max_depth=max_depth, logger=logger
    )
    mismatches: List[str] = []
    for _ in range(samples):
        qi = generator.quasi_identity(max_premises)
        in_first = evaluate_quasi_identity(qi, first, budget=budget, logger=logger)
        in_second = evaluate_quasi_identity(qi, second, budget=budget, logger=logger)
        if in_first.holds != in_second.holds:
            mismatches.append(
                f"{format_quasi_identity(qi)}: "
                f"{in_first.holds} in {first.name}, {in_second.holds} in {second.name}"
            )

    logger.info(f"{samples} quasi-identities compared, {len(mismatches)} mismatches")
    return AgreementReport(checked=samples, seed=seed, mismatches=tuple(mismatches))
