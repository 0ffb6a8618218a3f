# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""This module contains the pytest tests for splitting Z-space points."""

from __future__ import annotations

import pathlib
from typing import Callable, Dict, List

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolgeo.algebra import CAlgebra, Element, FiniteBooleanAlgebra, FiniteCofiniteElement, format_element
from boolgeo.common import InvalidOrderError, MissingCoordinateError, ParseError, PreconditionError
from boolgeo.normalizer import all_tuples, canonicalize_system
from boolgeo.splitting import (
    SplitOrder,
    bound_point,
    canonical_violations,
    load_point,
    parse_point,
    raise_coordinate,
    split,
    split_solves,
    splitting_violations,
)
from boolgeo.syntax import parse_system, z_name

B3 = FiniteBooleanAlgebra(3)

finite_points = st.lists(st.integers(min_value=0, max_value=7), min_size=4, max_size=4).map(
    lambda codes: {z_name(alpha): B3.from_code(code) for alpha, code in zip(all_tuples(2), codes)}
)
fc_elements = st.builds(
    FiniteCofiniteElement,
    cofinite=st.booleans(),
    members=st.frozensets(st.integers(min_value=0, max_value=5), max_size=4),
)
fc_points = st.lists(fc_elements, min_size=4, max_size=4).map(
    lambda values: {z_name(alpha): value for alpha, value in zip(all_tuples(2), values)}
)
orders = st.permutations(all_tuples(2)).map(lambda alphas: SplitOrder(alphas=tuple(alphas)))


def _formatted(point: Dict[str, Element]) -> Dict[str, str]:
    return {name: format_element(value) for name, value in point.items()}


@given(st.one_of(finite_points, fc_points), orders)
def test_split_has_the_splitting_properties(p: Dict[str, Element], order: SplitOrder) -> None:
    """Test any point split along any order keeps the first coordinate and every prefix join."""
    q = split(p, order)

    assert splitting_violations(p, q, order) == []


def test_split_of_a_two_atom_point(b2: FiniteBooleanAlgebra) -> None:
    """Test the coordinate listed first keeps its value."""
    p = {"z(0)": b2.one(), "z(1)": b2.element([0])}

    lex = split(p, SplitOrder.parse("lex", 1))
    reversed_order = split(p, SplitOrder.parse("1,0", 1))

    assert _formatted(lex) == {"z(0)": "1", "z(1)": "0"}
    assert _formatted(reversed_order) == {"z(0)": "{1}", "z(1)": "{0}"}


def test_splitting_violations_are_reported(b2: FiniteBooleanAlgebra) -> None:
    """Test an unsplit point is not disjoint and a changed first coordinate is noticed."""
    p = {"z(0)": b2.one(), "z(1)": b2.element([0])}
    order = SplitOrder.lexicographic(1)

    assert splitting_violations(p, p, order) == ["z(0) and z(1) are not disjoint"]
    q = {"z(0)": b2.element([1]), "z(1)": b2.element([0])}
    assert splitting_violations(p, q, order) == [
        "first coordinate z(0) changed",
        "join of the coordinates up to z(0) changed",
    ]


def test_order_parsing() -> None:
    """Test the text forms of an order."""
    assert SplitOrder.parse("lex", 2).alphas == ((0, 0), (0, 1), (1, 0), (1, 1))
    order = SplitOrder.parse(" 10, 00, 01, 11 ", 2)
    assert order.first == (1, 0)
    assert order.describe() == "10,00,01,11"
    assert order.positions()[(1, 1)] == 3
    assert SplitOrder.with_first(2, (1, 1)).describe() == "11,00,01,10"


@pytest.mark.parametrize(
    "text, message",
    [
        ("10,00,01", "order is not a permutation of the 4 index tuples of length 2"),
        ("10,00,01,10", "order is not a permutation"),
        ("10,00,01,1", "'1' is not a bit string of length 2"),
        ("ab", "'ab' is not a bit string of length 2"),
    ],
)
def test_invalid_orders(text: str, message: str) -> None:
    """Test orders that are not permutations of the index tuples."""
    with pytest.raises(InvalidOrderError) as excinfo:
        SplitOrder.parse(text, 2)

    assert message in str(excinfo.value)


def test_split_needs_matching_point_and_order(b2: FiniteBooleanAlgebra) -> None:
    """Test the point must have exactly the coordinates of the order."""
    with pytest.raises(InvalidOrderError):
        split({"z(0)": b2.one(), "z(1)": b2.zero()}, SplitOrder.lexicographic(2))
    with pytest.raises(MissingCoordinateError):
        split({"z(0)": b2.one(), "z(2)": b2.zero()}, SplitOrder.lexicographic(1))


def test_split_solves_the_canonical_system(b2_c1: CAlgebra) -> None:
    """Test the bound point of a consistent system splits into a solution."""
    cs = canonicalize_system(parse_system("vars x1\nx1 <= c1\n", calg=b2_c1))
    p = bound_point(cs)

    assert canonical_violations(cs, p) == ["z(0) * z(1) = 0"]
    assert canonical_violations(cs, p, relaxed=True) == []
    q = split_solves(cs, p)
    assert _formatted(q) == {"z(0)": "1", "z(1)": "0"}
    assert canonical_violations(cs, q) == []


def test_split_solves_rejects_points_outside_the_bounds(b2_c1: CAlgebra) -> None:
    """Test the precondition names the first failing constraint."""
    b2 = b2_c1.algebra
    cs = canonicalize_system(parse_system("vars x1\nx1 <= c1\n", calg=b2_c1))

    with pytest.raises(PreconditionError) as excinfo:
        split_solves(cs, {"z(0)": b2.one(), "z(1)": b2.one()})

    assert excinfo.value.constraint == "z(1) <= {0}"


def test_canonical_violations_of_the_cover(b2_c1: CAlgebra) -> None:
    """Test a point whose coordinates do not join to 1."""
    b2 = b2_c1.algebra
    cs = canonicalize_system(parse_system("vars x1\nx1 <= c1\n", calg=b2_c1))
    zero = b2.zero()

    assert canonical_violations(cs, {"z(0)": zero, "z(1)": zero}) == ["z(0) + z(1) = 1"]


def test_raise_coordinate(b2: FiniteBooleanAlgebra) -> None:
    """Test a coordinate is joined with an element and the others are kept."""
    p = {"z(0)": b2.element([1]), "z(1)": b2.zero()}

    raised = raise_coordinate(p, (1,), b2.element([0]))

    assert _formatted(raised) == {"z(0)": "{1}", "z(1)": "{0}"}
    assert _formatted(p) == {"z(0)": "{1}", "z(1)": "0"}
    with pytest.raises(MissingCoordinateError):
        raise_coordinate(p, (1, 1), b2.one())


def test_parse_point_file() -> None:
    """Test a point file with an included algebra, comments and spaces."""
    point_file = parse_point("include-algebra b2-c1\nz( 1 ) = {0}  # the bound\nz(0) = 1\n")

    assert point_file.n == 1
    assert point_file.calg.name == "b2-c1"
    assert list(point_file.point) == ["z(0)", "z(1)"]
    assert _formatted(point_file.point) == {"z(0)": "1", "z(1)": "{0}"}


def test_load_point_with_inline_algebra(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a point over the finite-cofinite algebra given inline."""
    path = write_file(
        "p.pt", "algebra finite-cofinite\nz(0,0) = co{0}\nz(0,1) = {0}\nz(1,0) = 0\nz(1,1) = 0\n"
    )

    point_file = load_point(path)

    assert point_file.n == 2
    assert _formatted(point_file.point)["z(0,0)"] == "co{0}"


@pytest.mark.parametrize(
    "lines, message, line, column",
    [
        (["z(0) = 1", "z(1) = 0"], "no algebra bound", 1, 1),
        (["include-algebra b2-c1"], "no coordinates given", 1, 1),
        (["include-algebra b2-c1", "z(0) = 1", "z(0) = 0"], "coordinate z(0) given twice", 3, 1),
        (["include-algebra b2-c1", "z(0) = 1"], "missing coordinates z(1)", 2, 1),
        (["include-algebra b2-c1", "z(0) = 1", "z(1) = 0", "z(0,1) = 0"], "different lengths", 4, 1),
        (["include-algebra b2-c1", "z(0) = 1", "z(1) = {5}"], "atom 5 is outside 0..1", 3, 8),
        (["include-algebra b2-c1", "x1 = 1"], "expected 'z(a1,...,an) = <element>'", 2, 1),
    ],
)
def test_point_file_errors(lines: List[str], message: str, line: int, column: int) -> None:
    """Test malformed point files report the offending line and column."""
    with pytest.raises(ParseError) as excinfo:
        parse_point("\n".join(lines) + "\n", source="bad.pt")

    error = excinfo.value
    assert message in error.message, f"expected '{message}' in '{error.message}'"
    assert (error.line, error.column) == (line, column), f"position was {error.line}:{error.column}"
