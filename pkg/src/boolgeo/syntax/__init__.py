# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Terms, equations and systems: syntax tree, parser, printer and evaluators."""

__all__ = [
    "CodeArray",
    "Const",
    "Equation",
    "Join",
    "MaskArray",
    "Meet",
    "Not",
    "One",
    "Parser",
    "Point",
    "Position",
    "QuasiIdentity",
    "Relation",
    "SchematicEquation",
    "System",
    "SystemReader",
    "Term",
    "Token",
    "TokenKind",
    "Var",
    "Zero",
    "evaluate_term",
    "evaluate_term_codes",
    "format_equation",
    "format_quasi_identity",
    "format_system",
    "format_term",
    "load_system",
    "parse_equation",
    "parse_quasi_identity",
    "parse_system",
    "parse_term",
    "satisfied_mask",
    "satisfies",
    "satisfies_all",
    "sort_variables",
    "tokenize",
    "z_name",
]

from .evaluator import Point, evaluate_term, satisfies, satisfies_all
from .parser import Parser, Token, TokenKind, parse_equation, parse_term, tokenize
from .printer import format_equation, format_system, format_term
from .quasi_identity import QuasiIdentity, format_quasi_identity, parse_quasi_identity
from .system_file import SystemReader, load_system, parse_system
from .terms import (
    Const,
    Equation,
    Join,
    Meet,
    Not,
    One,
    Position,
    Relation,
    SchematicEquation,
    System,
    Term,
    Var,
    Zero,
    sort_variables,
    z_name,
)
from .vectorised import CodeArray, MaskArray, evaluate_term_codes, satisfied_mask
