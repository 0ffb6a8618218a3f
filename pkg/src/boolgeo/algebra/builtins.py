# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module with the built-in algebra fixtures.

Built-ins can be named anywhere an algebra file path is accepted.
"""

from __future__ import annotations

__all__ = [
    "BUILTIN_ALGEBRAS",
    "builtin_algebra",
    "resolve_algebra",
]

import logging
import pathlib
from typing import Dict

from .algebra_file import load_algebra, parse_algebra
from .calgebra import CAlgebra

BUILTIN_ALGEBRAS: Dict[str, str] = {
    "fc-chain": """
        # c_n = {0..n-1}, a strictly increasing chain of constants
        algebra finite-cofinite
        family c segment n=1..
    """,
    "fc-singletons": """
        # cs_n = {n}, C is the whole finite-cofinite algebra
        algebra finite-cofinite
        family cs singleton n=0..
    """,
    "fc-parity": """
        # even and odd segments, their unions are the evens and odds
        algebra finite-cofinite
        family ceven even-segment n=1..
        family codd odd-segment n=1..
    """,
    "fc-trivial": """
        algebra finite-cofinite
    """,
    "fc-point": """
        algebra finite-cofinite
        const c1 = {0}
    """,
    "b2-c1": """
        # C = {0, c1, ~c1, 1} inside 2 atoms
        algebra finite 2
        const c1 = {0}
    """,
    "b3-c1": """
        # C = {0, c1, ~c1, 1} inside 3 atoms
        algebra finite 3
        const c1 = {0,1}
    """,
}
"""Descriptions of the built-in algebras, by name."""


def builtin_algebra(name: str, logger: logging.Logger | None = None) -> CAlgebra:
    """Get a built-in algebra by name.

    :raises KeyError: if there is no built-in of that name.
    """
    if name not in BUILTIN_ALGEBRAS:
        raise KeyError(f"no built-in algebra '{name}', expected one of {sorted(BUILTIN_ALGEBRAS)}")
    return parse_algebra(BUILTIN_ALGEBRAS[name], source=name, logger=logger)


def resolve_algebra(reference: str, logger: logging.Logger | None = None) -> CAlgebra:
    """Get the algebra named by a built-in name or a file path.

    :raises FileNotFoundError: if the reference is neither.
    """
    if reference in BUILTIN_ALGEBRAS:
        return builtin_algebra(reference, logger=logger)
    path = pathlib.Path(reference)
    if not path.is_file():
        raise FileNotFoundError(f"'{reference}' is neither a built-in algebra nor a file")
    return load_algebra(path, logger=logger)
