# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for reading system files.

A system file looks like::

    include-algebra b2-c1        # or a path, or inline algebra directives
    vars x1 x2
    x1 * ~x2 + c1 = 0
    x2 <= c1
    each n=1.. : c{n} <= x1     # schematic equations, fixtures only

``#`` starts a comment. The algebra may instead be given by the caller.
"""

from __future__ import annotations

__all__ = [
    "LineHandler",
    "SystemReader",
    "load_system",
    "parse_system",
]

import logging
import pathlib
import re
from typing import Callable, Dict, List, Optional

from boolgeo.algebra import ALGEBRA_KEYWORDS, AlgebraBuilder, CAlgebra, resolve_algebra, strip_comment
from boolgeo.common import ParseError

from .parser import parse_equation
from .terms import Equation, SchematicEquation, System

LineHandler = Callable[[str, int], None]
"""A callback handling the rest of a line after its keyword, with the line number."""

VARIABLE_REGEX = re.compile(r"^(x\d+|z\([01](,[01])*\))$")
"""Declared variable names: ``x<digits>`` or ``z(a1,...,an)`` without spaces."""

EACH_REGEX = re.compile(r"^each\s+(?P<range>n=\d+\.\.)\s*:(?P<equation>.*)$")
"""A schematic equation line."""


class SystemReader:
    """Reads the lines of a system file into a :py:class:`System`.

    Callers may register handlers for extra keywords; fixture files use this
    for their ``k`` and ``solution`` lines.
    """

    def __init__(
        self: SystemReader,
        calg: CAlgebra | None = None,
        source: str = "<string>",
        base_dir: pathlib.Path | None = None,
        extra_handlers: Dict[str, LineHandler] | None = None,
        logger: logging.Logger | None = None,
    ) -> None:
        """Create the reader.

        :param calg: the algebra used when the file binds none.
        :param source: the input name reported in parse errors.
        :param base_dir: the directory relative ``include-algebra`` paths
            are resolved against.
        :param extra_handlers: handlers for extra line keywords.
        :param logger: the logger to use.
        """
        self.default_calg = calg
        self.source = source
        self.base_dir = base_dir or pathlib.Path.cwd()
        self.extra_handlers = extra_handlers or {}
        self.logger = logger or logging.getLogger(__name__)
        self._builder = AlgebraBuilder(source=source, logger=self.logger)
        self._included: Optional[CAlgebra] = None
        self._calg: Optional[CAlgebra] = None
        self._variables: Optional[List[str]] = None
        self._equations: List[Equation] = []
        self._schema: List[SchematicEquation] = []

    def _error(self: SystemReader, message: str, lineno: int, column: int = 1) -> ParseError:
        return ParseError(message, line=lineno, column=column, source=self.source)

    @property
    def calg(self: SystemReader) -> Optional[CAlgebra]:
        """Get the algebra bound so far, building inline directives on first use."""
        if self._calg is None:
            if self._included is not None:
                self._calg = self._included
            elif self._builder.has_algebra:
                self._calg = self._builder.build()
            else:
                self._calg = self.default_calg
        return self._calg

    def read(self: SystemReader, text: str) -> System:
        """Read the whole input.

        :raises ParseError: on the first malformed line.
        """
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = strip_comment(raw)
            if not line:
                continue
            self._read_line(raw.split("#", maxsplit=1)[0], line, lineno)

        if self._variables is None:
            raise self._error("missing 'vars' header", max(1, len(text.splitlines())))
        return System(tuple(self._variables), tuple(self._equations), tuple(self._schema), algebra=self.calg)

    def _read_line(self: SystemReader, raw: str, line: str, lineno: int) -> None:
        keyword, _, rest = line.partition(" ")
        if keyword in ALGEBRA_KEYWORDS:
            if self._calg is not None or self._included is not None:
                raise self._error(f"'{keyword}' directive after the algebra is already bound", lineno)
            self._builder.add_directive(raw, lineno)
        elif keyword == "include-algebra":
            self._include(rest.strip(), lineno)
        elif keyword == "vars":
            self._declare_variables(raw, rest, lineno)
        elif keyword in self.extra_handlers:
            self.extra_handlers[keyword](rest.strip(), lineno)
        elif keyword == "each":
            self._read_schematic(raw, line, lineno)
        else:
            self._read_equation(raw, lineno)

    def _include(self: SystemReader, reference: str, lineno: int) -> None:
        if self._included is not None or self._builder.has_algebra or self._calg is not None:
            raise self._error("the algebra is bound twice", lineno)
        if not reference:
            raise self._error("expected 'include-algebra <path|builtin>'", lineno)
        candidate = self.base_dir / reference
        target = str(candidate) if candidate.is_file() else reference
        try:
            self._included = resolve_algebra(target, logger=self.logger)
        except FileNotFoundError as e:
            raise self._error(str(e), lineno, len("include-algebra") + 2) from e
        self.logger.debug(f"{self.source}:{lineno}: included algebra {self._included.name}")

    def _declare_variables(self: SystemReader, raw: str, rest: str, lineno: int) -> None:
        if self._variables is not None:
            raise self._error("'vars' declared twice", lineno)
        names = rest.split()
        for name in names:
            if not VARIABLE_REGEX.match(name):
                raise self._error(f"'{name}' is not a variable name", lineno, raw.find(name) + 1)
        if len(set(names)) != len(names):
            raise self._error("duplicate variable in 'vars'", lineno)
        self._variables = names

    def _require_variables(self: SystemReader, lineno: int) -> List[str]:
        if self._variables is None:
            raise self._error("equation before the 'vars' header", lineno)
        return self._variables

    def _read_equation(self: SystemReader, raw: str, lineno: int) -> None:
        variables = self._require_variables(lineno)
        calg = self.calg
        equation = parse_equation(raw, calg=calg, variables=variables, source=self.source, line=lineno)
        if calg is None and equation.constants():
            constant = sorted(equation.constants())[0]
            message = f"constant '{constant}' used but no algebra is bound"
            raise self._error(message, lineno, raw.find(constant) + 1)
        self._equations.append(equation)

    def _read_schematic(self: SystemReader, raw: str, line: str, lineno: int) -> None:
        variables = self._require_variables(lineno)
        match = EACH_REGEX.match(line)
        if match is None:
            raise self._error("expected 'each n=<start>.. : <equation>'", lineno)
        start = int(match.group("range")[2:-2])
        offset = raw.index(":") + 1
        text = " " * offset + raw[offset:]
        equation = parse_equation(
            text,
            calg=self.calg,
            variables=variables,
            source=self.source,
            line=lineno,
            placeholder_index=start,
        )
        self._schema.append(SchematicEquation(template=equation, start=start))


def parse_system(
    text: str,
    calg: CAlgebra | None = None,
    source: str = "<string>",
    base_dir: pathlib.Path | None = None,
    logger: logging.Logger | None = None,
) -> System:
    """Parse the text of a system file.

    :param text: the file contents.
    :param calg: the algebra used when the text binds none.
    :param source: the input name reported in parse errors.
    :param base_dir: the directory relative includes are resolved against.
    :raises ParseError: on a syntax error, an unknown constant or an
        undeclared variable.
    """
    return SystemReader(calg=calg, source=source, base_dir=base_dir, logger=logger).read(text)


def load_system(
    path: pathlib.Path,
    calg: CAlgebra | None = None,
    logger: logging.Logger | None = None,
) -> System:
    """Read a system file, resolving includes relative to its directory."""
    logger = logger or logging.getLogger(__name__)
    assert path.exists() and path.is_file(), f"system file {path} does not exist"
    logger.info(f"loading system from {path}")
    return parse_system(path.read_text(), calg=calg, source=str(path), base_dir=path.parent, logger=logger)
