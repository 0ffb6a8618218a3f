# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""The ``boolgeo`` command line."""

__all__ = [
    "CommandOutput",
    "RunConfig",
    "build_parser",
    "config_from_args",
    "format_point",
    "main",
    "render",
    "run",
]

from .boolgeo import RunConfig, build_parser, config_from_args, main, run
from .output import CommandOutput, format_point, render
