# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for reading Z-space point files.

A point file gives every Z coordinate of one point::

    include-algebra b2-c1     # or inline algebra directives
    z(0) = {0}
    z(1) = 1

The algebra may instead be given by the caller.
"""

from __future__ import annotations

__all__ = [
    "PointFile",
    "load_point",
    "parse_point",
]

import dataclasses
import logging
import pathlib
import re
from typing import Dict, Optional, Tuple

from boolgeo.algebra import (
    ALGEBRA_KEYWORDS,
    AlgebraBuilder,
    CAlgebra,
    Element,
    resolve_algebra,
    strip_comment,
)
from boolgeo.common import ParseError
from boolgeo.normalizer import all_tuples, parse_alpha
from boolgeo.syntax import z_name

COORDINATE_REGEX = re.compile(r"^(?P<name>z\(\s*[01](?:\s*,\s*[01])*\s*\))\s*=\s*(?P<value>\S.*)$")
"""A coordinate line ``z(a1,...,an) = <element>``."""


@dataclasses.dataclass(frozen=True)
class PointFile:
    """The contents of a point file.

    :ivar calg: the algebra the coordinates belong to.
    :vartype calg: CAlgebra
    :ivar n: the length of the index tuples.
    :vartype n: int
    :ivar point: the coordinates by Z variable name.
    :vartype point: Dict[str, Element]
    """

    calg: CAlgebra
    n: int
    point: Dict[str, Element]


def parse_point(
    text: str,
    calg: CAlgebra | None = None,
    source: str = "<string>",
    base_dir: pathlib.Path | None = None,
    logger: logging.Logger | None = None,
) -> PointFile:
    """Parse the text of a point file.

    :param text: the file contents.
    :param calg: the algebra used when the text binds none.
    :param source: the input name reported in parse errors.
    :param base_dir: the directory relative includes are resolved against.
    :raises ParseError: on a malformed line, a repeated or missing
        coordinate, or coordinates of different lengths.
    """
    logger = logger or logging.getLogger(__name__)
    base_dir = base_dir or pathlib.Path.cwd()
    builder = AlgebraBuilder(source=source, logger=logger)
    bound: Optional[CAlgebra] = None
    raw_values: Dict[str, Tuple[str, int, int]] = {}

    def _error(message: str, lineno: int, column: int = 1) -> ParseError:
        return ParseError(message, line=lineno, column=column, source=source)

    last_line = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        if not line:
            continue
        last_line = lineno
        keyword, _, rest = line.partition(" ")
        if keyword in ALGEBRA_KEYWORDS:
            builder.add_directive(raw, lineno)
        elif keyword == "include-algebra":
            candidate = base_dir / rest.strip()
            reference = str(candidate) if candidate.is_file() else rest.strip()
            try:
                bound = resolve_algebra(reference, logger=logger)
            except FileNotFoundError as e:
                raise _error(str(e), lineno, len("include-algebra") + 2) from e
        else:
            match = COORDINATE_REGEX.match(line)
            if match is None:
                raise _error("expected 'z(a1,...,an) = <element>'", lineno)
            name = re.sub(r"\s+", "", match.group("name"))
            if name in raw_values:
                raise _error(f"coordinate {name} given twice", lineno)
            raw_values[name] = (match.group("value"), lineno, raw.find(match.group("value")) + 1)

    if bound is None and builder.has_algebra:
        bound = builder.build()
    calg = bound or calg
    if calg is None:
        raise _error("no algebra bound, use include-algebra or pass one", 1)
    if not raw_values:
        raise _error("no coordinates given", last_line)

    lengths = {len(parse_alpha(name)) for name in raw_values}
    if len(lengths) != 1:
        raise _error("coordinates have index tuples of different lengths", last_line)
    n = lengths.pop()
    missing = [z_name(alpha) for alpha in all_tuples(n) if z_name(alpha) not in raw_values]
    if missing:
        raise _error(f"missing coordinates {', '.join(missing)}", last_line)

    point: Dict[str, Element] = {}
    for name, (value, lineno, column) in raw_values.items():
        try:
            point[name] = calg.algebra.parse_element(value)
        except ValueError as e:
            raise _error(str(e), lineno, column) from e
    logger.debug(f"{source}: read a point with {len(point)} coordinates")
    return PointFile(calg=calg, n=n, point={z_name(alpha): point[z_name(alpha)] for alpha in all_tuples(n)})


def load_point(
    path: pathlib.Path,
    calg: CAlgebra | None = None,
    logger: logging.Logger | None = None,
) -> PointFile:
    """Read a point file, resolving includes relative to its directory."""
    logger = logger or logging.getLogger(__name__)
    assert path.exists() and path.is_file(), f"point file {path} does not exist"
    logger.info(f"loading point from {path}")
    return parse_point(path.read_text(), calg=calg, source=str(path), base_dir=path.parent, logger=logger)
