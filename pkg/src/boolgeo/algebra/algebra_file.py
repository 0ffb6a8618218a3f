# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for reading algebra description files.

An algebra description has one directive per line, ``#`` starts a comment::

    algebra finite 3
    const c1 = {0,1}

    algebra finite-cofinite
    const ca = co{0}
    family c segment n=1..

The same directives may appear at the top of system and fixture files, so the
parsing is done by :py:class:`AlgebraBuilder`, which consumes one directive at
a time.
"""

from __future__ import annotations

__all__ = [
    "ALGEBRA_KEYWORDS",
    "AlgebraBuilder",
    "load_algebra",
    "parse_algebra",
    "strip_comment",
]

import logging
import pathlib
import re
from typing import Dict, List, Optional

from boolgeo.common import ParseError

from .boolean_algebra import BooleanAlgebra, FiniteBooleanAlgebra, FiniteCofiniteAlgebra
from .calgebra import CAlgebra
from .elements import Element
from .families import ConstantFamily, FamilyKind, parse_range

ALGEBRA_KEYWORDS = ("algebra", "const", "family")
"""Directives handled by :py:class:`AlgebraBuilder`."""

CONSTANT_NAME_REGEX = re.compile(r"^c[A-Za-z0-9_]*$")
"""Constant names are ``c`` followed by letters, digits or underscores."""


def strip_comment(line: str) -> str:
    """Get the line without a trailing ``#`` comment or surrounding spaces."""
    return line.split("#", maxsplit=1)[0].strip()


def _column(raw: str, token: str) -> int:
    index = raw.find(token)
    return index + 1 if index >= 0 else 1


class AlgebraBuilder:
    """Accumulates algebra directives and builds the :py:class:`CAlgebra`."""

    def __init__(
        self: AlgebraBuilder,
        source: str = "<string>",
        logger: logging.Logger | None = None,
    ) -> None:
        """Create the builder.

        :param source: the name of the input, used in parse errors.
        :param logger: the logger to use.
        """
        self.source = source
        self.logger = logger or logging.getLogger(__name__)
        self.algebra: Optional[BooleanAlgebra] = None
        self._constants: Dict[str, Element] = {}
        self._families: List[ConstantFamily] = []

    @property
    def has_algebra(self: AlgebraBuilder) -> bool:
        """Check if an ``algebra`` directive has been seen."""
        return self.algebra is not None

    def _error(self: AlgebraBuilder, message: str, lineno: int, column: int = 1) -> ParseError:
        return ParseError(message, line=lineno, column=column, source=self.source)

    def add_directive(self: AlgebraBuilder, raw: str, lineno: int) -> None:
        """Consume one directive line.

        :param raw: the line as written in the file.
        :param lineno: the 1-based line number.
        :raises ParseError: if the directive is malformed.
        """
        line = strip_comment(raw)
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "algebra":
            self._add_algebra(raw, rest, lineno)
        elif keyword == "const":
            self._add_constant(raw, rest, lineno)
        elif keyword == "family":
            self._add_family(raw, rest, lineno)
        else:
            raise self._error(f"unknown directive '{keyword}'", lineno)

    def _add_algebra(self: AlgebraBuilder, raw: str, rest: str, lineno: int) -> None:
        if self.algebra is not None:
            raise self._error("algebra declared twice", lineno)
        parts = rest.split()
        if parts == ["finite-cofinite"]:
            self.algebra = FiniteCofiniteAlgebra()
        elif len(parts) == 2 and parts[0] == "finite" and parts[1].isdigit() and int(parts[1]) >= 1:
            self.algebra = FiniteBooleanAlgebra(int(parts[1]))
        else:
            raise self._error(
                f"expected 'algebra finite <k>' or 'algebra finite-cofinite', got 'algebra {rest}'",
                lineno,
                _column(raw, rest) if rest else 1,
            )
        self.logger.debug(f"{self.source}:{lineno}: algebra {self.algebra.carrier}")

    def _require_algebra(self: AlgebraBuilder, lineno: int) -> BooleanAlgebra:
        if self.algebra is None:
            raise self._error("constants must follow an 'algebra' directive", lineno)
        return self.algebra

    def _add_constant(self: AlgebraBuilder, raw: str, rest: str, lineno: int) -> None:
        algebra = self._require_algebra(lineno)
        name, eq, value = rest.partition("=")
        name = name.strip()
        if not eq or not value.strip():
            raise self._error(f"expected 'const <name> = <element>', got 'const {rest}'", lineno)
        if not CONSTANT_NAME_REGEX.match(name):
            raise self._error(f"constant name '{name}' must start with 'c'", lineno, _column(raw, name))
        if name in self._constants:
            raise self._error(f"constant '{name}' declared twice", lineno, _column(raw, name))
        try:
            self._constants[name] = algebra.parse_element(value)
        except ValueError as e:
            raise self._error(str(e), lineno, _column(raw, value.strip())) from e

    def _add_family(self: AlgebraBuilder, raw: str, rest: str, lineno: int) -> None:
        algebra = self._require_algebra(lineno)
        if not isinstance(algebra, FiniteCofiniteAlgebra):
            raise self._error("families are only supported by the finite-cofinite algebra", lineno)
        parts = rest.split()
        if len(parts) != 3:
            message = f"expected 'family <prefix> <kind> n=<start>..[<stop>]', got 'family {rest}'"
            raise self._error(message, lineno)
        prefix, kind_str, range_str = parts
        if not CONSTANT_NAME_REGEX.match(prefix) or any(ch.isdigit() for ch in prefix):
            message = f"family prefix '{prefix}' must be 'c' followed by letters"
            raise self._error(message, lineno, _column(raw, prefix))
        try:
            kind = FamilyKind.from_str(kind_str)
            start, stop = parse_range(range_str)
        except ValueError as e:
            raise self._error(str(e), lineno, _column(raw, kind_str)) from e
        self._families.append(ConstantFamily(prefix=prefix, kind=kind, start=start, stop=stop))

    def build(self: AlgebraBuilder, name: str = "") -> CAlgebra:
        """Build the C-algebra from the directives seen so far.

        :raises ParseError: if no ``algebra`` directive was given.
        """
        if self.algebra is None:
            raise ParseError("missing 'algebra' directive", line=1, column=1, source=self.source)
        for family in self._families:
            for constant_name in self._constants:
                if family.index_of(constant_name) is not None:
                    raise ParseError(
                        f"constant '{constant_name}' clashes with {family.describe()}",
                        line=1,
                        source=self.source,
                    )
        return CAlgebra(
            self.algebra,
            constants=self._constants,
            families=self._families,
            name=name or self.source,
            logger=self.logger,
        )


def parse_algebra(text: str, source: str = "<string>", logger: logging.Logger | None = None) -> CAlgebra:
    """Parse an algebra description.

    :param text: the description.
    :param source: the name reported in parse errors and used as the algebra label.
    :raises ParseError: if the description is malformed.
    """
    builder = AlgebraBuilder(source=source, logger=logger)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not strip_comment(raw):
            continue
        builder.add_directive(raw, lineno)
    return builder.build()


def load_algebra(path: pathlib.Path, logger: logging.Logger | None = None) -> CAlgebra:
    """Read an algebra description file."""
    logger = logger or logging.getLogger(__name__)
    assert path.exists() and path.is_file(), f"algebra file {path} does not exist"
    logger.info(f"loading algebra from {path}")
    return parse_algebra(path.read_text(), source=str(path), logger=logger)
