# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the three-valued verdict shared by the decision procedures."""

from __future__ import annotations

__all__ = ["Verdict"]

import enum


class Verdict(enum.Enum):
    """An enumeration of the outcomes of a semi-decision procedure.

    ``UNKNOWN`` is always accompanied by the search bound that was used,
    see the verdict data classes that carry it.
    """

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @staticmethod
    def from_str(value: str) -> Verdict:
        """Get the verdict from a string, ignoring case and surrounding spaces."""
        return Verdict[value.strip().upper()]

    @staticmethod
    def from_bool(value: bool) -> Verdict:
        """Get ``YES`` for true and ``NO`` for false."""
        return Verdict.YES if value else Verdict.NO
