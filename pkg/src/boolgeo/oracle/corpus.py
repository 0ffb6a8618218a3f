# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the corpus of small systems the oracles are swept over.

The corpus starts with every single equation between literals (variables,
constants, 0, 1 and their complements) and is topped up with seeded random
systems of deeper terms.
"""

from __future__ import annotations

__all__ = [
    "literal_terms",
    "system_corpus",
]

import itertools
import logging
from typing import List, Sequence

from boolgeo.algebra import CAlgebra
from boolgeo.classifier import RandomSystemGenerator
from boolgeo.common.config import DEFAULT_SEED
from boolgeo.syntax import Const, Equation, Not, One, Relation, System, Term, Var, Zero

_logger = logging.getLogger(__name__)


def literal_terms(variables: Sequence[str], constants: Sequence[str]) -> List[Term]:
    """Get the leaves over the given names and their complements."""
    leaves: List[Term] = [Zero(), One()]
    leaves.extend(Var(v) for v in variables)
    leaves.extend(Const(c) for c in constants)
    return leaves + [Not(leaf) for leaf in leaves]


def system_corpus(
    calg: CAlgebra,
    size: int = 2000,
    variables: Sequence[str] = ("x1", "x2"),
    max_equations: int = 2,
    max_depth: int = 3,
    seed: int = DEFAULT_SEED,
    logger: logging.Logger | None = None,
) -> List[System]:
    """Get a deterministic corpus of at least ``size`` finite systems.

    :param calg: the C-algebra whose constants the systems use.
    :param size: the least number of systems.
    :param variables: the variables of every system.
    :param max_equations: the largest number of equations of a random system.
    :param max_depth: the largest depth of a random term.
    :param seed: the seed of the random part.
    :param logger: the logger to use.
    """
    logger = logger or _logger
    constants = [name for name, _ in calg.generators()]
    literals = literal_terms(variables, constants)
    corpus = [
        System(tuple(variables), (Equation(lhs, rhs, relation),))
        for lhs, rhs in itertools.product(literals, repeat=2)
        for relation in (Relation.EQ, Relation.LEQ)
    ]
    generator = RandomSystemGenerator(variables, constants, seed=seed, max_depth=max_depth, logger=logger)
    while len(corpus) < size:
        corpus.append(generator.system(max_equations))

    logger.debug(f"corpus of {len(corpus)} systems over {calg.name}")
    return corpus
