# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""This module defines elements of the pytest test harness shared by all tests."""

from __future__ import annotations

import pathlib
import random
from typing import Callable

import pytest
from hypothesis import settings

from boolgeo.algebra import (
    CAlgebra,
    FiniteBooleanAlgebra,
    FiniteCofiniteAlgebra,
    builtin_algebra,
    parse_algebra,
)

settings.register_profile("boolgeo", deadline=None, max_examples=100)
settings.load_profile("boolgeo")


@pytest.fixture
def rng() -> random.Random:
    """Create a seeded random number generator."""
    return random.Random(20240601)


@pytest.fixture
def b2() -> FiniteBooleanAlgebra:
    """Create the finite algebra with 2 atoms."""
    return FiniteBooleanAlgebra(2)


@pytest.fixture
def fc() -> FiniteCofiniteAlgebra:
    """Create the finite-cofinite algebra."""
    return FiniteCofiniteAlgebra()


@pytest.fixture
def b2_c1() -> CAlgebra:
    """Create the 2 atom algebra with the constant c1 = {0}."""
    return builtin_algebra("b2-c1")


@pytest.fixture
def b3_c1() -> CAlgebra:
    """Create the 3 atom algebra with the constant c1 = {0,1}."""
    return builtin_algebra("b3-c1")


@pytest.fixture
def b3_c2() -> CAlgebra:
    """Create a 3 atom algebra with two constants generating all of it."""
    return parse_algebra("algebra finite 3\nconst c1 = {0}\nconst c2 = {0,1}\n", source="b3-c2")


@pytest.fixture
def fc_point() -> CAlgebra:
    """Create the finite-cofinite algebra with the constant c1 = {0}."""
    return builtin_algebra("fc-point")


@pytest.fixture
def fc_chain() -> CAlgebra:
    """Create the finite-cofinite algebra with the increasing segment family."""
    return builtin_algebra("fc-chain")


@pytest.fixture
def fc_parity() -> CAlgebra:
    """Create the finite-cofinite algebra with even and odd segment families."""
    return builtin_algebra("fc-parity")


@pytest.fixture
def write_file(tmp_path: pathlib.Path) -> Callable[[str, str], pathlib.Path]:
    """Get a function writing a text file into the test's temporary directory."""

    def _write(name: str, text: str) -> pathlib.Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write
