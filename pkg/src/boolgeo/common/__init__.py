# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module that includes code shared by every boolgeo submodule.

This covers the exception hierarchy, the three-valued verdict and the
documented default limits used across the library and the command line.
"""

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
    "Verdict",
]

from .errors import (
    BlowUpLimitError,
    BoolGeoError,
    BudgetExceededError,
    CarrierMismatchError,
    EmptyInfimumError,
    FixtureRejectedError,
    InvalidOrderError,
    MissingCoordinateError,
    NonIsomorphicConstantsError,
    ParseError,
    PreconditionError,
    ReplacementUnavailableError,
    UnassignedVariableError,
    UndeclaredVariableError,
    UnknownConstantError,
    UnsupportedAlgebraError,
)
from .verdict import Verdict
