# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for tokenising and parsing terms, equations and quasi-identities.

Grammar, ``*`` binding tighter than ``+`` and ``~`` tightest::

    term     := meet ('+' meet)*
    meet     := unary ('*' unary)*
    unary    := '~' unary | atom
    atom     := VAR | CONST | '0' | '1' | '(' term ')'
    equation := term ('=' | '<=' | '>=') term
    qi       := [equation ('&' equation)*] '->' equation

Variables are ``x<digits>`` or ``z(a1,...,an)``; constants are ``c`` followed
by letters, digits, underscores and, in schematic equations, ``{n}``.
"""

from __future__ import annotations

__all__ = [
    "Parser",
    "Token",
    "TokenKind",
    "parse_equation",
    "parse_term",
    "tokenize",
]

import dataclasses
import enum
import logging
import re
from typing import TYPE_CHECKING, Iterable, List, Optional, Sequence, Tuple

from boolgeo.common import ParseError, UndeclaredVariableError, UnknownConstantError

from .terms import PLACEHOLDER, Const, Equation, Join, Meet, Not, One, Relation, Term, Var, Zero

if TYPE_CHECKING:
    from boolgeo.algebra import CAlgebra

_logger = logging.getLogger(__name__)


class TokenKind(enum.Enum):
    """The kinds of lexical tokens."""

    VAR = "variable"
    CONST = "constant"
    ZERO = "0"
    ONE = "1"
    JOIN = "+"
    MEET = "*"
    NOT = "~"
    LPAREN = "("
    RPAREN = ")"
    EQ = "="
    LEQ = "<="
    GEQ = ">="
    AND = "&"
    IMPLIES = "->"
    END = "end of input"


TOKEN_REGEX = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<zvar>z\(\s*[01](?:\s*,\s*[01])*\s*\))
    |(?P<var>x\d+)
    |(?P<const>c[A-Za-z0-9_]*(?:\{n\}[A-Za-z0-9_]*)?)
    |(?P<number>[01](?![0-9A-Za-z_]))
    |(?P<op><=|>=|->|[=+*~()&])
    """,
    re.VERBOSE,
)
"""Regular expression of a single token, tried at the current position."""

_OPERATORS = {
    kind.value: kind for kind in TokenKind if kind not in (TokenKind.VAR, TokenKind.CONST, TokenKind.END)
}


@dataclasses.dataclass(frozen=True)
class Token:
    """A lexical token with its 1-based position."""

    kind: TokenKind
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, source: str = "<string>") -> List[Token]:
    """Split a single-line input into tokens.

    :param text: the input.
    :param line: the line number reported in positions.
    :param source: the input name reported in errors.
    :raises ParseError: on a character that starts no token.
    """
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = TOKEN_REGEX.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character '{text[pos]}'", line=line, column=pos + 1, source=source)
        group = match.lastgroup
        value = match.group()
        if group == "zvar":
            tokens.append(Token(TokenKind.VAR, re.sub(r"\s+", "", value), line, pos + 1))
        elif group == "var":
            tokens.append(Token(TokenKind.VAR, value, line, pos + 1))
        elif group == "const":
            tokens.append(Token(TokenKind.CONST, value, line, pos + 1))
        elif group in ("number", "op"):
            tokens.append(Token(_OPERATORS[value], value, line, pos + 1))
        pos = match.end()
    tokens.append(Token(TokenKind.END, "", line, len(text) + 1))
    return tokens


class Parser:
    """Recursive descent parser over a token list.

    When ``variables`` is given every variable must be declared in it; when
    ``calg`` is given every constant must resolve in it.
    """

    def __init__(
        self: Parser,
        text: str,
        calg: CAlgebra | None = None,
        variables: Sequence[str] | None = None,
        line: int = 1,
        source: str = "<string>",
        allow_placeholder: bool = False,
        placeholder_index: int = 0,
    ) -> None:
        """Create the parser for one line of input.

        :param text: the input.
        :param calg: the C-algebra constant names must resolve in.
        :param variables: the declared variables, ``None`` to accept any.
        :param line: the line number reported in positions.
        :param source: the input name reported in errors.
        :param allow_placeholder: accept ``{n}`` in constant names.
        :param placeholder_index: the index used to check placeholder constants.
        """
        self.source = source
        self.calg = calg
        self.variables = set(variables) if variables is not None else None
        self.allow_placeholder = allow_placeholder
        self.placeholder_index = placeholder_index
        self.tokens = tokenize(text, line=line, source=source)
        self.index = 0

    @property
    def current(self: Parser) -> Token:
        """Get the token at the cursor."""
        return self.tokens[self.index]

    def _advance(self: Parser) -> Token:
        token = self.current
        if token.kind != TokenKind.END:
            self.index += 1
        return token

    def _error(self: Parser, message: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(message, line=token.line, column=token.column, source=self.source)

    def _expect(self: Parser, kind: TokenKind) -> Token:
        if self.current.kind != kind:
            found = self.current.text or self.current.kind.value
            raise self._error(f"expected '{kind.value}' but found '{found}'")
        return self._advance()

    def expect_end(self: Parser) -> None:
        """Check the whole input has been consumed."""
        if self.current.kind != TokenKind.END:
            raise self._error(f"unexpected '{self.current.text}' after the end of the expression")

    def parse_term(self: Parser) -> Term:
        """Parse ``meet ('+' meet)*``, associating to the left."""
        term = self._parse_meet()
        while self.current.kind == TokenKind.JOIN:
            token = self._advance()
            term = Join(term, self._parse_meet(), position=(token.line, token.column))
        return term

    def _parse_meet(self: Parser) -> Term:
        term = self._parse_unary()
        while self.current.kind == TokenKind.MEET:
            token = self._advance()
            term = Meet(term, self._parse_unary(), position=(token.line, token.column))
        return term

    def _parse_unary(self: Parser) -> Term:
        if self.current.kind == TokenKind.NOT:
            token = self._advance()
            return Not(self._parse_unary(), position=(token.line, token.column))
        return self._parse_atom()

    def _parse_atom(self: Parser) -> Term:
        token = self.current
        position = (token.line, token.column)
        if token.kind == TokenKind.VAR:
            self._advance()
            if self.variables is not None and token.text not in self.variables:
                raise UndeclaredVariableError(
                    f"undeclared variable '{token.text}'",
                    line=token.line,
                    column=token.column,
                    source=self.source,
                )
            return Var(token.text, position=position)
        if token.kind == TokenKind.CONST:
            self._advance()
            self._check_constant(token)
            return Const(token.text, position=position)
        if token.kind == TokenKind.ZERO:
            self._advance()
            return Zero(position=position)
        if token.kind == TokenKind.ONE:
            self._advance()
            return One(position=position)
        if token.kind == TokenKind.LPAREN:
            self._advance()
            term = self.parse_term()
            self._expect(TokenKind.RPAREN)
            return term
        found = token.text or token.kind.value
        raise self._error(f"expected a term but found '{found}'")

    def _check_constant(self: Parser, token: Token) -> None:
        name = token.text
        if PLACEHOLDER in name:
            if not self.allow_placeholder:
                raise self._error(f"placeholder {PLACEHOLDER} is only allowed in schematic equations", token)
            name = name.replace(PLACEHOLDER, str(self.placeholder_index))
        if self.calg is not None and not self.calg.has_constant(name):
            raise UnknownConstantError(
                f"unknown constant '{name}' in algebra {self.calg.name}",
                line=token.line,
                column=token.column,
                source=self.source,
            )

    def parse_equation(self: Parser) -> Equation:
        """Parse ``term ('=' | '<=' | '>=') term``.

        ``t >= s`` is read as ``s <= t``.
        """
        lhs = self.parse_term()
        token = self.current
        position = (token.line, token.column)
        if token.kind == TokenKind.EQ:
            self._advance()
            return Equation(lhs, self.parse_term(), Relation.EQ, position=position)
        if token.kind == TokenKind.LEQ:
            self._advance()
            return Equation(lhs, self.parse_term(), Relation.LEQ, position=position)
        if token.kind == TokenKind.GEQ:
            self._advance()
            return Equation(self.parse_term(), lhs, Relation.LEQ, position=position)
        found = token.text or token.kind.value
        raise self._error(f"expected '=', '<=' or '>=' but found '{found}'")

    def parse_quasi_identity(self: Parser) -> Tuple[List[Equation], Equation]:
        """Parse ``[equation ('&' equation)*] '->' equation``."""
        premises: List[Equation] = []
        if self.current.kind != TokenKind.IMPLIES:
            premises.append(self.parse_equation())
            while self.current.kind == TokenKind.AND:
                self._advance()
                premises.append(self.parse_equation())
        self._expect(TokenKind.IMPLIES)
        conclusion = self.parse_equation()
        return premises, conclusion


def parse_term(
    text: str,
    calg: CAlgebra | None = None,
    variables: Iterable[str] | None = None,
    source: str = "<string>",
    line: int = 1,
) -> Term:
    """Parse a term.

    :raises ParseError: on a syntax error, an unknown constant or an
        undeclared variable.
    """
    declared = list(variables) if variables is not None else None
    parser = Parser(text, calg=calg, variables=declared, line=line, source=source)
    term = parser.parse_term()
    parser.expect_end()
    return term


def parse_equation(
    text: str,
    calg: CAlgebra | None = None,
    variables: Iterable[str] | None = None,
    source: str = "<string>",
    line: int = 1,
    placeholder_index: Optional[int] = None,
) -> Equation:
    """Parse an equation.

    :param placeholder_index: if given, ``{n}`` is accepted in constant names
        and checked with this index.
    :raises ParseError: on a syntax error, an unknown constant or an
        undeclared variable.
    """
    parser = Parser(
        text,
        calg=calg,
        variables=list(variables) if variables is not None else None,
        line=line,
        source=source,
        allow_placeholder=placeholder_index is not None,
        placeholder_index=placeholder_index or 0,
    )
    equation = parser.parse_equation()
    parser.expect_end()
    _logger.debug(f"parsed equation {text.strip()!r}")
    return equation
