# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for E_k fixtures: infinite systems with exactly ``k`` solutions.

Every finite subsystem of an E_k system has infinitely many solutions. A
fixture file is a system file with schematic equations, plus the declared
number of solutions and the solutions themselves::

    include-algebra fc-chain
    vars x1
    each n=1.. : c{n} <= x1
    k 1
    solution 1

A ``solution`` line lists one element per declared variable.
"""

from __future__ import annotations

__all__ = [
    "BUILTIN_FIXTURES",
    "EkFixture",
    "FixtureReader",
    "builtin_fixture",
    "load_fixture",
    "parse_fixture",
    "resolve_fixture",
]

import dataclasses
import logging
import pathlib
import re
from typing import Dict, List, Optional, Tuple

from boolgeo.algebra import CAlgebra, Element
from boolgeo.common import ParseError
from boolgeo.syntax import System, SystemReader

ELEMENT_TOKEN_REGEX = re.compile(r"co\{[^}]*\}|\{[^}]*\}|[01](?![0-9])|\S+")
"""One element in a ``solution`` line."""

BUILTIN_FIXTURES: Dict[str, str] = {
    "chain-e1": """
        # x must contain every c_n = {0..n-1}; only 1 does
        include-algebra fc-chain
        vars x1
        each n=1.. : c{n} <= x1
        k 1
        solution 1
    """,
    "chain-e0": """
        # x must contain the even segments and avoid the odd ones;
        # only the set of even numbers would, and it is not finite-cofinite
        include-algebra fc-parity
        vars x1
        each n=1.. : ceven{n} <= x1
        each n=1.. : x1 <= ~codd{n}
        k 0
    """,
}
"""Descriptions of the built-in fixtures, by name."""


@dataclasses.dataclass(kw_only=True, frozen=True)
class EkFixture:
    """A lazily presented system with its declared solutions.

    :ivar name: the fixture name or file.
    :vartype name: str
    :ivar system: the schematic system, bound to its algebra.
    :vartype system: System
    :ivar k: the declared number of solutions.
    :vartype k: int
    :ivar solutions: the declared solutions, as X-space points.
    :vartype solutions: Tuple[Dict[str, Element], ...]
    """

    name: str
    system: System
    k: int
    solutions: Tuple[Dict[str, Element], ...] = ()

    def __post_init__(self: EkFixture) -> None:
        """Check the declared solutions match ``k`` and the variables."""
        assert self.system.algebra is not None, f"fixture {self.name} has no algebra"
        assert self.k == len(self.solutions), f"{self.name}: k={self.k} but {len(self.solutions)} solutions"
        for solution in self.solutions:
            assert set(solution) == set(self.system.variables), f"solution of {self.name} misses variables"

    @property
    def calg(self: EkFixture) -> CAlgebra:
        """Get the algebra of the fixture."""
        assert self.system.algebra is not None
        return self.system.algebra

    def with_algebra(self: EkFixture, calg: CAlgebra) -> EkFixture:
        """Get the same fixture over another algebra with the same constants."""
        return dataclasses.replace(self, system=self.system.with_algebra(calg))


class FixtureReader:
    """Reads a fixture file through a :py:class:`SystemReader` with ``k`` and ``solution`` lines."""

    def __init__(
        self: FixtureReader,
        source: str = "<string>",
        base_dir: pathlib.Path | None = None,
        logger: logging.Logger | None = None,
    ) -> None:
        """Create the reader.

        :param source: the input name reported in parse errors.
        :param base_dir: the directory relative includes are resolved against.
        :param logger: the logger to use.
        """
        self.source = source
        self.logger = logger or logging.getLogger(__name__)
        self._k: Optional[int] = None
        self._solution_lines: List[Tuple[str, int]] = []
        self._reader = SystemReader(
            source=source,
            base_dir=base_dir,
            extra_handlers={"k": self._read_k, "solution": self._read_solution},
            logger=self.logger,
        )

    def _error(self: FixtureReader, message: str, lineno: int) -> ParseError:
        return ParseError(message, line=lineno, column=1, source=self.source)

    def _read_k(self: FixtureReader, rest: str, lineno: int) -> None:
        if self._k is not None:
            raise self._error("'k' declared twice", lineno)
        if not rest.isdigit():
            raise self._error(f"expected 'k <count>', got 'k {rest}'", lineno)
        self._k = int(rest)

    def _read_solution(self: FixtureReader, rest: str, lineno: int) -> None:
        self._solution_lines.append((rest, lineno))

    def read(self: FixtureReader, text: str, name: str = "") -> EkFixture:
        """Read the whole fixture.

        :raises ParseError: on a malformed line, a missing ``k`` or algebra,
            or solutions that do not match the variables or ``k``.
        """
        system = self._reader.read(text)
        last_line = max(1, len(text.splitlines()))
        calg = system.algebra
        if calg is None:
            raise self._error("a fixture must bind its algebra", 1)
        if self._k is None:
            raise self._error("missing 'k <count>' line", last_line)

        solutions: List[Dict[str, Element]] = []
        for rest, lineno in self._solution_lines:
            tokens = ELEMENT_TOKEN_REGEX.findall(rest)
            if len(tokens) != len(system.variables):
                raise self._error(f"expected {len(system.variables)} elements, got {len(tokens)}", lineno)
            try:
                solutions.append({v: calg.algebra.parse_element(t) for v, t in zip(system.variables, tokens)})
            except ValueError as e:
                raise self._error(str(e), lineno) from e
        if len(solutions) != self._k:
            raise self._error(f"'k {self._k}' but {len(solutions)} solutions are listed", last_line)

        self.logger.debug(f"{self.source}: {len(system.schema)} schematic equations, k={self._k}")
        return EkFixture(name=name or self.source, system=system, k=self._k, solutions=tuple(solutions))


def parse_fixture(
    text: str,
    name: str = "",
    source: str = "<string>",
    base_dir: pathlib.Path | None = None,
    logger: logging.Logger | None = None,
) -> EkFixture:
    """Parse the text of a fixture file."""
    return FixtureReader(source=source, base_dir=base_dir, logger=logger).read(text, name=name)


def load_fixture(path: pathlib.Path, logger: logging.Logger | None = None) -> EkFixture:
    """Read a fixture file, resolving includes relative to its directory."""
    logger = logger or logging.getLogger(__name__)
    assert path.exists() and path.is_file(), f"fixture file {path} does not exist"
    logger.info(f"loading fixture from {path}")
    return parse_fixture(path.read_text(), source=str(path), base_dir=path.parent, logger=logger)


def builtin_fixture(name: str, logger: logging.Logger | None = None) -> EkFixture:
    """Get a built-in fixture by name.

    :raises KeyError: if there is no built-in of that name.
    """
    if name not in BUILTIN_FIXTURES:
        raise KeyError(f"no built-in fixture '{name}', expected one of {sorted(BUILTIN_FIXTURES)}")
    return parse_fixture(BUILTIN_FIXTURES[name], name=name, source=name, logger=logger)


def resolve_fixture(reference: str, logger: logging.Logger | None = None) -> EkFixture:
    """Get the fixture named by a built-in name or a file path.

    :raises FileNotFoundError: if the reference is neither.
    """
    if reference in BUILTIN_FIXTURES:
        return builtin_fixture(reference, logger=logger)
    path = pathlib.Path(reference)
    if not path.is_file():
        raise FileNotFoundError(f"'{reference}' is neither a built-in fixture nor a file")
    return load_fixture(path, logger=logger)
