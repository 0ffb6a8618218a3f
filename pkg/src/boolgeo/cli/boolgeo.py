# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for the ``boolgeo`` command line.

Each subcommand builds a :py:class:`CommandOutput` that is rendered either
through a template or as ``key<TAB>value`` lines. The exit code is 0 on
success, 1 when a check gives a negative verdict and 2 on usage or parse
errors.
"""

from __future__ import annotations

__all__ = [
    "COMMANDS",
    "RunConfig",
    "build_parser",
    "config_from_args",
    "main",
    "run",
]

import argparse
import dataclasses
import logging
import pathlib
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from boolgeo.algebra import CAlgebra, format_element, resolve_algebra
from boolgeo.classifier import (
    GeomKind,
    classify,
    evaluate_quasi_identity,
    geom_equivalent,
    resolve_fixture,
    sample_quasi_identity_agreement,
    sample_radical_agreement,
    verify_ek_fixture,
)
from boolgeo.common import (
    BoolGeoError,
    ParseError,
    PreconditionError,
    ReplacementUnavailableError,
    Verdict,
)
from boolgeo.common.config import (
    DEFAULT_BLOWUP_LIMIT,
    DEFAULT_CERTIFICATE_BOUND,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_QI_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_SUBSET_CAP,
    DEFAULT_SURVIVOR_WINDOW,
)
from boolgeo.normalizer import SchematicCanonicalSystem, canonicalize_schematic, canonicalize_system, x_from_z
from boolgeo.solver import (
    EquivalenceMethod,
    RadicalKind,
    consistency_witness,
    describe_solutions,
    enumerate_solutions,
    finite_replacement_x,
    is_consistent_canonical,
    radical_member,
    systems_equivalent,
)
from boolgeo.splitting import SplitOrder, load_point, split, splitting_violations
from boolgeo.syntax import (
    System,
    format_equation,
    format_quasi_identity,
    load_system,
    parse_equation,
    parse_quasi_identity,
    z_name,
)

from .output import CommandOutput, format_point, render

_logger = logging.getLogger(__name__)

COMMANDS = ("normalize", "solve", "radical", "equiv", "split", "classify", "geomeq", "qident", "ek-verify")
"""The subcommands, ``ek verify`` is named ``ek-verify``."""

FILE_INPUTS: Dict[str, int] = {"normalize": 1, "solve": 1, "radical": 1, "equiv": 2, "split": 1}
"""How many leading inputs of a subcommand must be existing files.

Algebra and fixture inputs may also name a built-in.
"""


@dataclasses.dataclass(kw_only=True, frozen=True)
class RunConfig:
    """The parsed command line.

    :ivar command: the subcommand, one of :py:data:`COMMANDS`.
    :vartype command: str
    :ivar inputs: the positional arguments, system, point, algebra or fixture references.
    :vartype inputs: Tuple[str, ...]
    :ivar algebra: the algebra bound to systems without ``include-algebra``.
    :vartype algebra: str | None
    :ivar drop_trivial: leave out index tuples whose bound is 1.
    :vartype drop_trivial: bool
    :ivar limit: the largest number of solutions printed by ``solve``.
    :vartype limit: int | None
    :ivar machine: print ``key<TAB>value`` lines instead of plain text.
    :vartype machine: bool
    """

    command: str
    inputs: Tuple[str, ...] = ()
    algebra: Optional[str] = None
    blowup_limit: int = DEFAULT_BLOWUP_LIMIT
    budget: int = DEFAULT_ENUMERATION_BUDGET
    seed: int = DEFAULT_SEED
    bound: int = DEFAULT_CERTIFICATE_BOUND
    window: int = DEFAULT_SURVIVOR_WINDOW
    samples: int = DEFAULT_QI_SAMPLES
    subset_cap: int = DEFAULT_SUBSET_CAP
    machine: bool = False
    verbose: bool = False
    drop_trivial: bool = False
    limit: Optional[int] = None
    candidate: Optional[str] = None
    method: str = "enumerate"
    order: str = "lex"
    formula: Optional[str] = None

    def __post_init__(self: RunConfig) -> None:
        """Check the subcommand is known."""
        assert self.command in COMMANDS, f"unknown subcommand {self.command}"


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--algebra", default=None, help="Algebra file or built-in for systems without include-algebra"
    )
    common.add_argument(
        "--blowup-limit",
        type=int,
        default=DEFAULT_BLOWUP_LIMIT,
        help="Largest number of variables of a canonical form",
    )
    common.add_argument(
        "--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET, help="Largest number of points enumerated"
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of every sampler")
    common.add_argument("--machine", action="store_true", help="Print key<TAB>value lines")
    common.add_argument("--verbose", action="store_true", help="Log debug messages on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Get the parser of the ``boolgeo`` command line."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="boolgeo", description="Equations over Boolean algebras with constants"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("normalize", parents=[common], help="Print the canonical form of a system")
    p.add_argument("inputs", nargs=1, metavar="system")
    p.add_argument("--drop-trivial", action="store_true", help="Leave out bounds equal to 1")

    p = commands.add_parser("solve", parents=[common], help="Print the solutions of a system")
    p.add_argument("inputs", nargs=1, metavar="system")
    p.add_argument("--limit", type=int, default=None, help="Largest number of solutions printed")

    p = commands.add_parser("radical", parents=[common], help="Decide radical membership of an equation")
    p.add_argument("inputs", nargs=1, metavar="system")
    p.add_argument("--candidate", required=True, help="The equation, e.g. 'x1 <= c1'")

    p = commands.add_parser("equiv", parents=[common], help="Decide whether two systems are equivalent")
    p.add_argument("inputs", nargs=2, metavar=("system1", "system2"))
    p.add_argument(
        "--method", choices=[m.value for m in EquivalenceMethod], default=EquivalenceMethod.ENUMERATE.value
    )

    p = commands.add_parser("split", parents=[common], help="Split a Z-space point")
    p.add_argument("inputs", nargs=1, metavar="point")
    p.add_argument("--order", default="lex", help="'lex' or a comma separated list of bit strings")

    p = commands.add_parser("classify", parents=[common], help="Classify a C-algebra")
    p.add_argument("inputs", nargs=1, metavar="algebra")
    p.add_argument("--bound", type=int, default=DEFAULT_CERTIFICATE_BOUND, help="Certificate bound")
    p.add_argument("--window", type=int, default=DEFAULT_SURVIVOR_WINDOW, help="Survivor window")

    p = commands.add_parser("geomeq", parents=[common], help="Decide geometric equivalence of two algebras")
    p.add_argument("inputs", nargs=2, metavar=("algebra1", "algebra2"))
    p.add_argument("--samples", type=int, default=DEFAULT_QI_SAMPLES, help="Number of sampled checks")
    p.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP, help="Largest |C| checked exactly")

    p = commands.add_parser("qident", parents=[common], help="Decide whether a quasi-identity holds")
    p.add_argument("inputs", nargs=1, metavar="algebra")
    p.add_argument("--formula", required=True, help="The quasi-identity, e.g. 'x1 = c1 -> ~x1 = c2'")

    ek = commands.add_parser("ek", help="E_k fixtures")
    ek_commands = ek.add_subparsers(dest="ek_command", required=True)
    p = ek_commands.add_parser("verify", parents=[common], help="Check an E_k certificate")
    p.add_argument("inputs", nargs=1, metavar="fixture")
    p.add_argument("--bound", type=int, default=DEFAULT_CERTIFICATE_BOUND, help="Certificate bound")
    p.add_argument("--window", type=int, default=DEFAULT_SURVIVOR_WINDOW, help="Survivor window")

    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse a command line.

    :raises SystemExit: with code 2 on a usage error.
    """
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    args.pop("ek_command", None)
    names = {f.name for f in dataclasses.fields(RunConfig)}
    values = {key: value for key, value in args.items() if key in names}
    values["inputs"] = tuple(values.get("inputs", ()))
    return RunConfig(command="ek-verify" if command == "ek" else command, **values)


def _default_algebra(config: RunConfig, logger: logging.Logger) -> Optional[CAlgebra]:
    if config.algebra is None:
        return None
    return resolve_algebra(config.algebra, logger=logger)


def _load(path: str, config: RunConfig, logger: logging.Logger) -> System:
    return load_system(pathlib.Path(path), calg=_default_algebra(config, logger), logger=logger)


def _bound_algebra(*systems: System) -> CAlgebra:
    for system in systems:
        if system.algebra is not None:
            return system.algebra
    raise PreconditionError("no algebra is bound, use include-algebra or --algebra", constraint="algebra")


def _normalize(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    system = _load(config.inputs[0], config, logger)
    calg = _bound_algebra(system)
    output = CommandOutput(exit_code=0, template="normalize.txt.j2")

    schematic: List[Tuple[str, str]] = []
    scs: Optional[SchematicCanonicalSystem] = None
    if system.is_schematic:
        scs = canonicalize_schematic(system, calg, blowup_limit=config.blowup_limit, logger=logger)
        cs = scs.fixed
        for alpha in cs.alphas:
            for bound in scs.schematic_bounds[alpha]:
                schematic.append((z_name(alpha), bound.describe()))
    else:
        cs = canonicalize_system(system, calg, blowup_limit=config.blowup_limit, logger=logger)

    replacement: List[str] = []
    reason = ""
    consistent = "unknown"
    try:
        resolved = cs if scs is None else scs.to_canonical()
        replaced = finite_replacement_x(resolved, drop_trivial=config.drop_trivial, logger=logger)
        replacement = [format_equation(eq) for eq in replaced.equations]
        consistent = "yes" if is_consistent_canonical(resolved) else "no"
    except ReplacementUnavailableError as e:
        reason = str(e)
        logger.warning(f"finite replacement unavailable: {reason}")

    bounds = cs.bound_lines(drop_trivial=config.drop_trivial)
    output.context = {
        "variables": " ".join(system.variables),
        "consistent": consistent,
        "bounds": bounds,
        "schematic": schematic,
        "replacement": replacement,
        "reason": reason,
    }
    output.add_row("variables", " ".join(system.variables))
    output.add_row("consistent", consistent)
    for name, bound in bounds:
        output.add_row(name, bound)
    for name, shape in schematic:
        output.add_row(f"{name} schematic", shape)
    for equation in replacement:
        output.add_row("replacement", equation)
    if reason:
        output.add_row("replacement-unavailable", reason)
    return output


def _solve(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    system = _load(config.inputs[0], config, logger)
    calg = _bound_algebra(system)
    if system.is_schematic:
        raise PreconditionError("solve needs a finite system", constraint="no 'each' equations")

    lines: List[str] = []
    bounds: List[Tuple[str, str]] = []
    example = ""
    truncated = 0
    if calg.algebra.is_finite:
        solutions = enumerate_solutions(system, calg, budget=config.budget, logger=logger)
        count: Optional[int] = solutions.count
        points = list(solutions)
        shown = points if config.limit is None else points[: max(config.limit, 0)]
        lines = [format_point(p, system.variables) for p in shown]
        truncated = len(points) - len(shown)
    else:
        cs = canonicalize_system(system, calg, blowup_limit=config.blowup_limit, logger=logger)
        count = describe_solutions(cs).count
        bounds = cs.bound_lines(drop_trivial=True)
        witness = consistency_witness(cs, logger=logger)
        if witness is not None:
            example = format_point(x_from_z(witness, system.variables, calg.algebra), system.variables)
            if count is None:
                logger.info(f"{len(system.equations)} equations over {calg.name} have infinite solutions")

    count_text = "infinite" if count is None else str(count)
    output = CommandOutput(exit_code=1 if count == 0 else 0, template="solve.txt.j2")
    output.context = {
        "count": count_text,
        "solutions": lines,
        "truncated": truncated,
        "bounds": bounds,
        "example": example,
    }
    output.add_row("count", count_text)
    for line in lines:
        output.add_row("solution", line)
    if truncated:
        output.add_row("truncated", truncated)
    for name, bound in bounds:
        output.add_row(name, bound)
    if example:
        output.add_row("example", example)
    return output


def _radical(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    system = _load(config.inputs[0], config, logger)
    calg = _bound_algebra(system)
    assert config.candidate is not None, "radical needs a candidate"
    candidate = parse_equation(config.candidate, calg=calg, source="--candidate")
    verdict = radical_member(system, candidate, calg, blowup_limit=config.blowup_limit, logger=logger)

    witness = format_point(verdict.witness) if verdict.witness is not None else ""
    output = CommandOutput(
        exit_code=1 if verdict.kind == RadicalKind.NONMEMBER else 0,
        template="radical.txt.j2",
        context={
            "candidate": format_equation(candidate),
            "verdict": verdict.kind.value,
            "failing": verdict.failing or "",
            "witness": witness,
        },
    )
    output.add_row("candidate", format_equation(candidate))
    output.add_row("verdict", verdict.kind.value)
    if verdict.failing:
        output.add_row("failing", verdict.failing)
    if witness:
        output.add_row("witness", witness)
    return output


def _equiv(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    first = _load(config.inputs[0], config, logger)
    second = _load(config.inputs[1], config, logger)
    result = systems_equivalent(
        first,
        second,
        _bound_algebra(first, second),
        method=EquivalenceMethod.from_str(config.method),
        budget=config.budget,
        blowup_limit=config.blowup_limit,
        logger=logger,
    )

    verdict = "equivalent" if result.equivalent else "inequivalent"
    witness = format_point(result.witness, result.variables) if result.witness is not None else ""
    output = CommandOutput(
        exit_code=0 if result.equivalent else 1,
        template="equiv.txt.j2",
        context={"verdict": verdict, "witness": witness, "solved_by": result.solved_by},
    )
    output.add_row("verdict", verdict)
    if witness:
        output.add_row("witness", witness)
        output.add_row("solved-by", result.solved_by)
    return output


def _split(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    point_file = load_point(
        pathlib.Path(config.inputs[0]), calg=_default_algebra(config, logger), logger=logger
    )
    order = SplitOrder.parse(config.order, point_file.n)
    q = split(point_file.point, order, logger=logger)
    violations = splitting_violations(point_file.point, q, order)

    coordinates = [(z_name(alpha), format_element(q[z_name(alpha)])) for alpha in order.alphas]
    coordinates.sort()
    output = CommandOutput(
        exit_code=1 if violations else 0,
        template="split.txt.j2",
        context={"order": order.describe(), "coordinates": coordinates, "violations": violations},
    )
    output.add_row("order", order.describe())
    for name, value in coordinates:
        output.add_row(name, value)
    output.add_row("violations", len(violations))
    for violation in violations:
        output.add_row("violation", violation)
    return output


def _verdict_text(verdict: Verdict, bound: int) -> str:
    if verdict == Verdict.UNKNOWN and bound:
        return f"{verdict.value} (bound {bound})"
    return verdict.value


def _classify(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    calg = resolve_algebra(config.inputs[0], logger=logger)
    verdicts = classify(calg, bound=config.bound, window=config.window, logger=logger)

    rows = [
        (v.algebra_class.value, _verdict_text(v.verdict, v.bound), list(v.evidence.items())) for v in verdicts
    ]
    output = CommandOutput(
        exit_code=0, template="classify.txt.j2", context={"algebra": calg.name, "verdicts": rows}
    )
    output.add_row("algebra", calg.name)
    for name, verdict, evidence in rows:
        output.add_row(name, verdict)
        for key, value in evidence:
            output.add_row(f"{name} {key}", value)
    return output


def _geomeq(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    first = resolve_algebra(config.inputs[0], logger=logger)
    second = resolve_algebra(config.inputs[1], logger=logger)
    verdict = geom_equivalent(first, second, subset_cap=config.subset_cap, logger=logger)

    reports = []
    if config.samples > 0 and first.algebra.is_finite and second.algebra.is_finite:
        reports.append(
            (
                "radical",
                sample_radical_agreement(
                    first,
                    second,
                    samples=config.samples,
                    seed=config.seed,
                    blowup_limit=config.blowup_limit,
                    logger=logger,
                ),
            )
        )
        reports.append(
            (
                "quasi-identities",
                sample_quasi_identity_agreement(
                    first,
                    second,
                    samples=config.samples,
                    seed=config.seed,
                    budget=config.budget,
                    logger=logger,
                ),
            )
        )

    mismatched = any(not report.agrees for _, report in reports)
    verdict_text = verdict.kind.value
    if verdict.kind == GeomKind.UNKNOWN and verdict.bound:
        verdict_text = f"{verdict_text} (bound {verdict.bound})"
    output = CommandOutput(
        exit_code=1 if verdict.kind == GeomKind.INEQUIVALENT or mismatched else 0,
        template="geomeq.txt.j2",
        context={
            "first": first.name,
            "second": second.name,
            "verdict": verdict_text,
            "evidence": list(verdict.evidence.items()),
            "reports": reports,
            "seed": config.seed,
        },
    )
    output.add_row("verdict", verdict_text)
    for key, value in verdict.evidence.items():
        output.add_row(key, value)
    for name, report in reports:
        output.add_row(f"{name} checked", report.checked)
        output.add_row(f"{name} mismatches", len(report.mismatches))
        for mismatch in report.mismatches:
            output.add_row(f"{name} mismatch", mismatch)
    return output


def _qident(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    calg = resolve_algebra(config.inputs[0], logger=logger)
    assert config.formula is not None, "qident needs a formula"
    qi = parse_quasi_identity(config.formula, calg=calg, source="--formula")
    result = evaluate_quasi_identity(
        qi, calg, budget=config.budget, blowup_limit=config.blowup_limit, logger=logger
    )

    holds = "yes" if result.holds else "no"
    counterexample = format_point(result.counterexample) if result.counterexample is not None else ""
    output = CommandOutput(
        exit_code=0 if result.holds else 1,
        template="qident.txt.j2",
        context={
            "algebra": calg.name,
            "formula": format_quasi_identity(qi),
            "holds": holds,
            "counterexample": counterexample,
        },
    )
    output.add_row("formula", format_quasi_identity(qi))
    output.add_row("holds", holds)
    if counterexample:
        output.add_row("counterexample", counterexample)
    return output


def _ek_verify(config: RunConfig, logger: logging.Logger) -> CommandOutput:
    fixture = resolve_fixture(config.inputs[0], logger=logger)
    certificate = verify_ek_fixture(
        fixture, bound=config.bound, window=config.window, budget=config.budget, logger=logger
    )

    survivors = [format_point(p) for p in certificate.survivors]
    least = min(certificate.prefix_counts) if certificate.prefix_counts else 0
    result = "pass" if certificate.passed else "fail"
    output = CommandOutput(
        exit_code=0 if certificate.passed else 1,
        template="ek_verify.txt.j2",
        context={
            "name": certificate.name,
            "k": certificate.k,
            "bound": certificate.bound,
            "window": certificate.window,
            "least": least,
            "survivors": survivors,
            "failures": list(certificate.failures),
            "result": result,
        },
    )
    output.add_row("fixture", certificate.name)
    output.add_row("k", certificate.k)
    output.add_row("bound", certificate.bound)
    output.add_row("window", certificate.window)
    output.add_row("least-prefix-solutions", least)
    for survivor in survivors:
        output.add_row("survivor", survivor)
    for failure in certificate.failures:
        output.add_row("failure", failure)
    output.add_row("result", result)
    return output


HANDLERS: Dict[str, Callable[[RunConfig, logging.Logger], CommandOutput]] = {
    "normalize": _normalize,
    "solve": _solve,
    "radical": _radical,
    "equiv": _equiv,
    "split": _split,
    "classify": _classify,
    "geomeq": _geomeq,
    "qident": _qident,
    "ek-verify": _ek_verify,
}


def run(
    config: RunConfig,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    logger: logging.Logger | None = None,
) -> int:
    """Run a subcommand.

    :param config: the parsed command line.
    :param stdout: where the result is written, ``sys.stdout`` by default.
    :param stderr: where errors are written, ``sys.stderr`` by default.
    :param logger: the logger to use.
    :returns: the exit code.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    logger = logger or _logger

    for path in config.inputs[: FILE_INPUTS.get(config.command, 0)]:
        if not pathlib.Path(path).is_file():
            stderr.write(f"boolgeo: error: file {path} does not exist\n")
            return 2

    try:
        output = HANDLERS[config.command](config, logger)
    except ParseError as e:
        stderr.write(f"{e.location_message()}\n")
        return 2
    except (BoolGeoError, FileNotFoundError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        stderr.write(f"boolgeo: error: {message}\n")
        return 2

    stdout.write(render(output, machine=config.machine))
    logger.debug(f"{config.command} finished with exit code {output.exit_code}")
    return output.exit_code


def main(argv: Sequence[str] | None = None) -> None:
    """Run the ``boolgeo`` command line and exit with its code."""
    config = config_from_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    sys.exit(run(config))


if __name__ == "__main__":
    main()
