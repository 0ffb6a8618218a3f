# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for rendering command results as plain text or machine-readable lines."""

from __future__ import annotations

__all__ = [
    "CommandOutput",
    "format_point",
    "render",
]

import dataclasses
import functools
import pathlib
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from boolgeo.algebra import Element, format_element

TEMPLATES_PATH = pathlib.Path(__file__).parent / "templates"
"""The directory of the plain-text report templates."""


@dataclasses.dataclass(kw_only=True)
class CommandOutput:
    """The result of a subcommand, before rendering.

    :ivar exit_code: 0 on success, 1 for a negative verdict.
    :vartype exit_code: int
    :ivar template: the name of the plain-text template.
    :vartype template: str
    :ivar context: the values the template renders.
    :vartype context: Dict[str, Any]
    :ivar rows: the ``key<TAB>value`` lines of machine-readable output, in order.
    :vartype rows: List[Tuple[str, str]]
    """

    exit_code: int
    template: str
    context: Dict[str, Any] = dataclasses.field(default_factory=dict)
    rows: List[Tuple[str, str]] = dataclasses.field(default_factory=list)

    def add_row(self: CommandOutput, key: str, value: Any) -> None:
        """Append a machine-readable line."""
        self.rows.append((key, str(value)))


def format_point(point: Mapping[str, Element], variables: Sequence[str] | None = None) -> str:
    """Get the text of a point, e.g. ``x1={0} x2=1``."""
    names = list(variables) if variables is not None else list(point)
    return " ".join(f"{name}={format_element(point[name])}" for name in names)


@functools.lru_cache(maxsize=1)
def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(TEMPLATES_PATH),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
    )


def render(output: CommandOutput, machine: bool = False) -> str:
    """Render the output of a subcommand.

    :param output: the subcommand output.
    :param machine: print ``key<TAB>value`` lines instead of the template.
    """
    if machine:
        return "".join(f"{key}\t{value}\n" for key, value in output.rows)
    template = _environment().get_template(output.template)
    return template.render(**output.context)
