# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""This module contains the pytest tests for the term syntax, evaluation and system files."""

from __future__ import annotations

import itertools
import pathlib
from typing import Callable

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolgeo.algebra import CAlgebra, FiniteBooleanAlgebra, FiniteElement
from boolgeo.common import (
    ParseError,
    UnassignedVariableError,
    UndeclaredVariableError,
    UnknownConstantError,
    UnsupportedAlgebraError,
)
from boolgeo.syntax import (
    Const,
    Equation,
    Join,
    Meet,
    Not,
    One,
    Relation,
    Term,
    Var,
    Zero,
    evaluate_term,
    evaluate_term_codes,
    format_equation,
    format_quasi_identity,
    format_system,
    format_term,
    parse_equation,
    parse_quasi_identity,
    parse_system,
    parse_term,
    satisfied_mask,
    satisfies,
    sort_variables,
    tokenize,
    z_name,
)

terms = st.recursive(
    st.sampled_from([Var("x1"), Var("x2"), Const("c1"), Const("c2"), Zero(), One()]),
    lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(Join, children, children),
        st.builds(Meet, children, children),
    ),
    max_leaves=12,
)

B3_C2 = CAlgebra(
    FiniteBooleanAlgebra(3),
    constants={"c1": FiniteElement(code=0b001, num_atoms=3), "c2": FiniteElement(code=0b011, num_atoms=3)},
    name="b3-c2",
)


def test_precedence_and_associativity() -> None:
    """Test complement binds tightest, then meet, then join, all to the left."""
    x1, x2, x3, c1 = Var("x1"), Var("x2"), Var("x3"), Const("c1")

    assert parse_term("~x1 * x2 + c1") == Join(Meet(Not(x1), x2), c1)
    assert parse_term("x1 + x2 * x3") == Join(x1, Meet(x2, x3))
    assert parse_term("x1 + x2 + x3") == Join(Join(x1, x2), x3)
    assert parse_term("~~x1") == Not(Not(x1))
    assert parse_term("~(x1 + 0) * 1") == Meet(Not(Join(x1, Zero())), One())


def test_tokens_carry_positions() -> None:
    """Test tokens are located by 1-based line and column."""
    tokens = tokenize("x1 <= z( 0 , 1 )", line=4)

    assert [(t.text, t.line, t.column) for t in tokens] == [
        ("x1", 4, 1),
        ("<=", 4, 4),
        ("z(0,1)", 4, 7),
        ("", 4, 17),
    ]


@pytest.mark.parametrize(
    "text, message, column",
    [
        ("x1 + * c1 = 0", "expected a term but found '*'", 6),
        ("x1 = ", "expected a term but found 'end of input'", 6),
        ("x1 + x2", "expected '=', '<=' or '>=' but found 'end of input'", 8),
        ("(x1 = 0", "expected ')' but found '='", 5),
        ("x1 = 0 )", "unexpected ')' after the end of the expression", 8),
        ("x1 = 2", "unexpected character '2'", 6),
        ("x1 = c{n}", "placeholder {n} is only allowed in schematic equations", 6),
    ],
)
def test_equation_syntax_errors(text: str, message: str, column: int) -> None:
    """Test syntax errors name the offending token and its column."""
    with pytest.raises(ParseError) as excinfo:
        parse_equation(text, source="eq.sys", line=3)

    assert excinfo.value.location_message() == f"eq.sys:3:{column}: {message}"


def test_unknown_constant_and_undeclared_variable(b2_c1: CAlgebra) -> None:
    """Test constants are checked against the algebra and variables against the declaration."""
    with pytest.raises(UnknownConstantError) as const_info:
        parse_equation("x1 <= c2", calg=b2_c1)
    with pytest.raises(UndeclaredVariableError) as var_info:
        parse_equation("x1 <= x2", variables=["x1"])

    assert const_info.value.column == 7
    assert "unknown constant 'c2' in algebra b2-c1" in const_info.value.message
    assert var_info.value.column == 7
    assert var_info.value.message == "undeclared variable 'x2'"


def test_geq_is_read_as_leq() -> None:
    """Test ``t >= s`` parses as ``s <= t``."""
    equation = parse_equation("x1 >= c1")

    assert equation == Equation(Const("c1"), Var("x1"), Relation.LEQ)
    assert format_equation(equation) == "c1 <= x1"


def test_desugared_inequality() -> None:
    """Test ``t <= s`` means ``t * s = t``."""
    equation = parse_equation("x1 <= c1").desugar()

    assert equation == Equation(Meet(Var("x1"), Const("c1")), Var("x1"), Relation.EQ)


@pytest.mark.parametrize(
    "text",
    [
        "x1 + x2 * x3",
        "(x1 + x2) * x3",
        "x1 + (x2 + x3)",
        "x1 * (x2 * x3)",
        "~(x1 * c1) + ~~x2",
        "~x1 * ~c1 + 0",
    ],
)
def test_printer_keeps_the_structure(text: str) -> None:
    """Test the printer adds exactly the parentheses the structure needs."""
    term = parse_term(text)

    assert format_term(term) == text
    assert parse_term(format_term(term)) == term


def test_term_queries() -> None:
    """Test variables, constants, depth and substitution of a term."""
    term = parse_term("x1 * ~c1 + x2")

    assert term.variables() == frozenset(["x1", "x2"])
    assert term.constants() == frozenset(["c1"])
    assert term.depth() == 3
    assert format_term(term.substitute({"x1": One()})) == "1 * ~c1 + x2"


def test_variable_names() -> None:
    """Test Z names and the variable sort order."""
    assert z_name((0, 1, 1)) == "z(0,1,1)"
    assert sort_variables(["x10", "x2", "z(0)", "x1", "x2"]) == ["x1", "x2", "x10", "z(0)"]


def test_quasi_identity_round_trip(b2_c1: CAlgebra) -> None:
    """Test quasi-identities with zero, one and two premises."""
    qi = parse_quasi_identity("x1 <= c1 & x2 = 0 -> x1 * x2 = 0", calg=b2_c1)

    assert len(qi.premises) == 2
    assert qi.variables == ["x1", "x2"]
    assert format_quasi_identity(qi) == "x1 <= c1 & x2 = 0 -> x1 * x2 = 0"
    assert format_quasi_identity(parse_quasi_identity("-> x1 + ~x1 = 1")) == "-> x1 + ~x1 = 1"
    assert qi.premise_system().variables == ("x1", "x2")

    with pytest.raises(ParseError) as excinfo:
        parse_quasi_identity("x1 = 0 & x2 = 0")
    assert "expected '->' but found 'end of input'" in str(excinfo.value)


def test_evaluate_term(b2_c1: CAlgebra) -> None:
    """Test structural evaluation with constants and variables."""
    b2 = b2_c1.algebra
    assert isinstance(b2, FiniteBooleanAlgebra)
    point = {"x1": b2.element([1])}

    assert evaluate_term(parse_term("x1 + c1"), point, b2_c1).is_one
    assert evaluate_term(parse_term("x1 * c1"), point, b2_c1).is_zero
    assert satisfies(point, parse_equation("x1 <= ~c1"), b2_c1)
    assert not satisfies(point, parse_equation("x1 <= c1"), b2_c1)

    with pytest.raises(UnassignedVariableError):
        evaluate_term(parse_term("x2"), point, b2_c1)


@given(terms)
def test_vectorised_evaluation_agrees_with_structural(term: Term) -> None:
    """Test the numpy evaluation of a batch gives the structural values."""
    calg = B3_C2
    b3 = calg.algebra
    assert isinstance(b3, FiniteBooleanAlgebra)
    points = list(itertools.product(range(8), repeat=2))
    columns = {
        "x1": np.array([p[0] for p in points], dtype=np.uint64),
        "x2": np.array([p[1] for p in points], dtype=np.uint64),
    }

    codes = evaluate_term_codes(term, columns, calg)

    for (a, b), code in zip(points, codes):
        expected = evaluate_term(term, {"x1": b3.from_code(a), "x2": b3.from_code(b)}, calg)
        assert isinstance(expected, FiniteElement)
        assert int(code) == expected.code, f"{format_term(term)} at x1={a} x2={b}"


def test_satisfied_mask(b2_c1: CAlgebra) -> None:
    """Test the batch satisfaction mask of ``x1 <= c1`` over all four points."""
    columns = {"x1": np.arange(4, dtype=np.uint64)}

    mask = satisfied_mask([parse_equation("x1 <= c1")], columns, b2_c1)

    assert mask.tolist() == [True, True, False, False]


def test_vectorised_evaluation_needs_a_finite_algebra(fc_point: CAlgebra) -> None:
    """Test the finite-cofinite algebra has no bitmask form."""
    with pytest.raises(UnsupportedAlgebraError):
        evaluate_term_codes(Const("c1"), {}, fc_point)


def test_parse_system_with_inline_algebra() -> None:
    """Test a system file binding its algebra with inline directives."""
    text = "algebra finite 2\nconst c1 = {0}\nvars x1 x2  # unknowns\nx1 <= c1\nx2 >= x1\n"

    system = parse_system(text, source="s.sys")

    assert system.variables == ("x1", "x2")
    assert [format_equation(eq) for eq in system] == ["x1 <= c1", "x1 <= x2"]
    assert system.algebra is not None and system.algebra.c_size == 4
    assert not system.is_schematic
    assert format_system(system) == "vars x1 x2\nx1 <= c1\nx1 <= x2\n"


def test_parse_system_with_included_file(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a relative ``include-algebra`` is resolved against the system file."""
    algebra_path = write_file("b3.alg", "algebra finite 3\nconst c1 = {0,1}\n")

    system = parse_system("include-algebra b3.alg\nvars x1\nx1 = c1\n", base_dir=algebra_path.parent)

    assert system.algebra is not None
    assert system.algebra.name == str(algebra_path)


def test_parse_schematic_system(fc_chain: CAlgebra) -> None:
    """Test schematic equations are instantiated round by round."""
    system = parse_system("vars x1\nx1 <= 1\neach n=1.. : c{n} <= x1\n", calg=fc_chain)

    assert system.is_schematic
    assert len(system) == 1
    assert [format_equation(eq) for eq in system.prefix(3)] == [
        "x1 <= 1",
        "c1 <= x1",
        "c2 <= x1",
        "c3 <= x1",
    ]
    assert format_system(system) == "vars x1\nx1 <= 1\neach n=1.. : c{n} <= x1\n"


@pytest.mark.parametrize(
    "text, message, line, column",
    [
        ("include-algebra b2-c1\nx1 = c1\n", "equation before the 'vars' header", 2, 1),
        ("include-algebra b2-c1\nvars x1\nvars x2\n", "'vars' declared twice", 3, 1),
        ("include-algebra b2-c1\nvars x1 y\n", "'y' is not a variable name", 2, 9),
        ("include-algebra b2-c1\nvars x1 x1\n", "duplicate variable in 'vars'", 2, 1),
        ("include-algebra b2-c1\nvars x1\nx1 + * c1 = 0\n", "expected a term but found '*'", 3, 6),
        ("include-algebra b2-c1\nvars x1\nx1 <= x2\n", "undeclared variable 'x2'", 3, 7),
        ("include-algebra b2-c1\nvars x1\nx1 <= c2\n", "unknown constant 'c2' in algebra b2-c1", 3, 7),
        ("vars x1\nx1 <= c1\n", "constant 'c1' used but no algebra is bound", 2, 7),
        ("include-algebra b2-c1\ninclude-algebra b3-c1\n", "the algebra is bound twice", 2, 1),
        ("include-algebra nowhere\n", "neither a built-in algebra nor a file", 1, 17),
        ("include-algebra b2-c1\nvars x1\neach n=1.. c{n} <= x1\n", "expected 'each n=<start>..", 3, 1),
        ("include-algebra b2-c1\n", "missing 'vars' header", 1, 1),
    ],
)
def test_system_file_errors(text: str, message: str, line: int, column: int) -> None:
    """Test malformed system files report the offending line and column."""
    with pytest.raises(ParseError) as excinfo:
        parse_system(text, source="bad.sys")

    error = excinfo.value
    assert message in error.message, f"expected '{message}' in '{error.message}'"
    assert (error.line, error.column) == (line, column), f"position was {error.line}:{error.column}"
