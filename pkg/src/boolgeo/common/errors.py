# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the exceptions raised by boolgeo.

All exceptions derive from :py:class:`BoolGeoError` and also from the
builtin exception category that fits them, so callers may catch either.
"""

from __future__ import annotations

__all__ = [
    "BlowUpLimitError",
    "BoolGeoError",
    "BudgetExceededError",
    "CarrierMismatchError",
    "EmptyInfimumError",
    "FixtureRejectedError",
    "InvalidOrderError",
    "MissingCoordinateError",
    "NonIsomorphicConstantsError",
    "ParseError",
    "PreconditionError",
    "ReplacementUnavailableError",
    "UnassignedVariableError",
    "UndeclaredVariableError",
    "UnknownConstantError",
    "UnsupportedAlgebraError",
]


class BoolGeoError(Exception):
    """Base class of every error raised by this package."""


class CarrierMismatchError(BoolGeoError, TypeError):
    """Raised when an operation mixes elements of different algebras."""


class ParseError(BoolGeoError, ValueError):
    """Raised when a text input does not conform to its grammar.

    :ivar message: the bare message, without position information.
    :vartype message: str
    :ivar line: the 1-based line of the offending input, 0 when unknown.
    :vartype line: int
    :ivar column: the 1-based column of the offending input, 0 when unknown.
    :vartype column: int
    :ivar source: the name of the file (or ``<string>``) being parsed.
    :vartype source: str
    """

    def __init__(
        self: ParseError,
        message: str,
        line: int = 0,
        column: int = 0,
        source: str = "<string>",
    ) -> None:
        """Create the parse error.

        :param message: what went wrong.
        :param line: the 1-based line number, 0 when unknown.
        :param column: the 1-based column number, 0 when unknown.
        :param source: the name of the input being parsed.
        """
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(self.location_message())

    def location_message(self: ParseError) -> str:
        """Get the ``source:line:column: message`` form of the error."""
        return f"{self.source}:{self.line}:{self.column}: {self.message}"

    def with_source(self: ParseError, source: str, line_offset: int = 0) -> ParseError:
        """Get a copy of this error relocated into a named file.

        :param source: the file name to report.
        :param line_offset: the number of lines preceding the parsed fragment.
        """
        return type(self)(self.message, line=self.line + line_offset, column=self.column, source=source)


class UnknownConstantError(ParseError):
    """Raised when a constant name does not resolve in the active C-algebra."""


class UndeclaredVariableError(ParseError):
    """Raised when an equation mentions a variable missing from the ``vars`` header."""


class UnassignedVariableError(BoolGeoError, LookupError):
    """Raised when a term is evaluated at a point that misses one of its variables."""


class MissingCoordinateError(BoolGeoError, LookupError):
    """Raised when an X-space or Z-space point misses a coordinate."""


class EmptyInfimumError(BoolGeoError, ValueError):
    """Raised when the infimum of an empty list is requested."""


class BlowUpLimitError(BoolGeoError, RuntimeError):
    """Raised when a system has more variables than the configured blow-up limit."""


class BudgetExceededError(BoolGeoError, RuntimeError):
    """Raised when an exhaustive enumeration would exceed its point budget."""


class InvalidOrderError(BoolGeoError, ValueError):
    """Raised when a splitting order is not a permutation of all index tuples."""


class PreconditionError(BoolGeoError, ValueError):
    """Raised when an input violates a documented precondition.

    :ivar constraint: the textual form of the failing constraint.
    :vartype constraint: str
    """

    def __init__(self: PreconditionError, message: str, constraint: str = "") -> None:
        """Create the error.

        :param message: what went wrong.
        :param constraint: the failing constraint, e.g. ``z(0,1) <= {0}``.
        """
        self.constraint = constraint
        super().__init__(message)


class ReplacementUnavailableError(BoolGeoError, RuntimeError):
    """Raised when a per-index infimum needed for a finite replacement is unknown."""


class NonIsomorphicConstantsError(BoolGeoError, ValueError):
    """Raised when two C-algebras do not share their subalgebra of constants."""


class FixtureRejectedError(BoolGeoError, ValueError):
    """Raised when an E_k fixture cannot exist over its algebra."""


class UnsupportedAlgebraError(BoolGeoError, ValueError):
    """Raised when an operation needs a kind of algebra it was not given."""
