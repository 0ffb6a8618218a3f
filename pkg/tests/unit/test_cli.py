# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""This module contains the pytest tests for the boolgeo command line."""

from __future__ import annotations

import io
import pathlib
import shlex
from typing import Callable, Tuple

import pytest

from boolgeo.cli.boolgeo import config_from_args, main, run

B2_SYSTEM = "include-algebra b2-c1\nvars x1\nx1 <= c1\n"
CHAIN_SYSTEM = "include-algebra fc-chain\nvars x1\neach n=1.. : c{n} <= x1\n"
PARITY_SYSTEM = (
    "include-algebra fc-parity\nvars x1\neach n=1.. : ceven{n} <= x1\neach n=1.. : x1 <= ~codd{n}\n"
)
SCRIPTS = pathlib.Path(__file__).resolve().parents[2] / "scripts"


def _run(*argv: str) -> Tuple[int, str, str]:
    stdout = io.StringIO()
    stderr = io.StringIO()
    exit_code = run(config_from_args(list(argv)), stdout=stdout, stderr=stderr)
    return exit_code, stdout.getvalue(), stderr.getvalue()


def test_config_from_args() -> None:
    """Test subcommand options and the nested ek verify subcommand are parsed."""
    config = config_from_args(["ek", "verify", "chain-e1", "--bound", "5", "--machine"])

    assert config.command == "ek-verify"
    assert config.inputs == ("chain-e1",)
    assert config.bound == 5
    assert config.machine

    config = config_from_args(["equiv", "a.sys", "b.sys", "--method", "canonical", "--seed", "4"])
    assert config.inputs == ("a.sys", "b.sys")
    assert config.method == "canonical"
    assert config.seed == 4


def test_usage_errors_exit_with_2() -> None:
    """Test missing arguments are usage errors."""
    with pytest.raises(SystemExit) as excinfo:
        config_from_args(["radical", "a.sys"])

    assert excinfo.value.code == 2


def test_normalize(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test the canonical bounds and the finite replacement of a system."""
    path = write_file("a.sys", B2_SYSTEM)

    exit_code, out, _ = _run("normalize", str(path), "--machine")

    assert exit_code == 0
    assert out == (
        "variables\tx1\n"
        "consistent\tyes\n"
        "z(0)\t1\n"
        "z(1)\t{0}\n"
        "replacement\t~x1 <= 1\n"
        "replacement\tx1 <= c1\n"
    )


def test_normalize_plain_text(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test the plain-text report leaves out trivial bounds on request."""
    path = write_file("a.sys", B2_SYSTEM)

    exit_code, out, _ = _run("normalize", str(path), "--drop-trivial")

    assert exit_code == 0
    assert "z(1) <= {0}" in out
    assert "z(0) <=" not in out
    assert "finite replacement:\n  x1 <= c1\n" in out


def test_normalize_schematic_without_replacement(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a schematic system whose bounds have no infimum."""
    path = write_file(
        "e0.sys",
        "include-algebra fc-parity\nvars x1\neach n=1.. : ceven{n} <= x1\neach n=1.. : x1 <= ~codd{n}\n",
    )

    exit_code, out, _ = _run("normalize", str(path), "--machine")

    assert exit_code == 0
    assert "consistent\tunknown\n" in out
    assert "replacement-unavailable\t" in out


def test_solve(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test the solutions are listed in order and can be truncated."""
    path = write_file("a.sys", B2_SYSTEM)

    exit_code, out, _ = _run("solve", str(path), "--machine")
    assert exit_code == 0
    assert out == "count\t2\nsolution\tx1=0\nsolution\tx1={0}\n"

    _, out, _ = _run("solve", str(path), "--limit", "1")
    assert out == "count 2\nx1=0\n... 1 more\n"


def test_solve_without_solutions(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test an inconsistent system exits with 1."""
    path = write_file("a.sys", "include-algebra b2-c1\nvars x1\n0 = c1\n")

    exit_code, out, _ = _run("solve", str(path), "--machine")

    assert exit_code == 1
    assert out == "count\t0\n"


def test_solve_over_finite_cofinite(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test the finite-cofinite algebra gives a count and an example from the canonical form."""
    path = write_file("a.sys", "vars x1\nx1 = c1\n")

    exit_code, out, _ = _run("solve", str(path), "--algebra", "fc-point", "--machine")

    assert exit_code == 0
    assert out.startswith("count\t")
    assert "example\tx1={0}\n" in out


def test_radical(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test members exit with 0 and nonmembers with 1 and a witness."""
    path = write_file("a.sys", B2_SYSTEM)

    exit_code, out, _ = _run("radical", str(path), "--candidate", "x1 * ~c1 = 0", "--machine")
    assert exit_code == 0
    assert "verdict\tmember\n" in out

    exit_code, out, _ = _run("radical", str(path), "--candidate", "x1 = c1", "--machine")
    assert exit_code == 1
    assert "verdict\tnonmember\n" in out
    assert "witness\tx1=0\n" in out

def test_radical_of_a_schematic_system(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test the each lines of a system take part in radical membership."""
    path = write_file("chain.sys", CHAIN_SYSTEM)

    exit_code, out, _ = _run("radical", str(path), "--candidate", "x1 = 1", "--machine")
    assert exit_code == 0
    assert out == "candidate\tx1 = 1\nverdict\tmember\n"

    exit_code, out, _ = _run("radical", str(path), "--candidate", "x1 = 0", "--machine")
    assert exit_code == 1
    assert "failing\tz(1) <= 0\n" in out
    assert "witness\tx1=1\n" in out


def test_radical_without_a_known_infimum(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a schematic system with no finite replacement is an error rather than a verdict."""
    path = write_file("e0.sys", PARITY_SYSTEM)

    exit_code, out, err = _run("radical", str(path), "--candidate", "x1 = 1")

    assert exit_code == 2
    assert out == ""
    assert err.startswith("boolgeo: error: no known infimum")



def test_equiv(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test equivalent and inequivalent pairs of systems."""
    first = write_file("a.sys", B2_SYSTEM)
    second = write_file("b.sys", "include-algebra b2-c1\nvars x1\nx1 * ~c1 = 0\n")
    third = write_file("c.sys", "include-algebra b2-c1\nvars x1\nx1 = c1\n")

    exit_code, out, _ = _run("equiv", str(first), str(second), "--machine")
    assert exit_code == 0
    assert out == "verdict\tequivalent\n"

    exit_code, out, _ = _run("equiv", str(first), str(third))
    assert exit_code == 1
    assert out == "inequivalent\nwitness x1=0 solves system 1 only\n"

def test_equiv_of_schematic_systems(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test the canonical method compares schematic systems through their infima."""
    chain = write_file("chain.sys", CHAIN_SYSTEM)
    top = write_file("top.sys", "include-algebra fc-chain\nvars x1\nx1 = 1\n")
    first = write_file("first.sys", "include-algebra fc-chain\nvars x1\nc1 <= x1\n")

    exit_code, out, _ = _run("equiv", str(chain), str(top), "--method", "canonical", "--machine")
    assert exit_code == 0
    assert out == "verdict\tequivalent\n"

    exit_code, out, _ = _run("equiv", str(chain), str(first), "--method", "canonical")
    assert exit_code == 1
    assert out == "inequivalent\nwitness x1={0} solves system 2 only\n"



def test_split(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a point file is split along the given order."""
    path = write_file("p.pt", "include-algebra b2-c1\nz(0) = 1\nz(1) = {0}\n")

    exit_code, out, _ = _run("split", str(path), "--machine")
    assert exit_code == 0
    assert out == "order\t0,1\nz(0)\t1\nz(1)\t0\nviolations\t0\n"

    _, out, _ = _run("split", str(path), "--order", "1,0", "--machine")
    assert out == "order\t1,0\nz(0)\t{1}\nz(1)\t{0}\nviolations\t0\n"


def test_classify() -> None:
    """Test the verdicts of a finite and an infinite C."""
    exit_code, out, _ = _run("classify", "b2-c1", "--machine")
    assert exit_code == 0
    assert "N\tyes\n" in out
    assert "U\tyes\n" in out

    exit_code, out, _ = _run("classify", "fc-chain", "--bound", "8", "--window", "6", "--machine")
    assert exit_code == 0
    assert "N\tno\n" in out
    assert "Q\tno\n" in out
    assert "Q fixture\tchain-e1\n" in out


def test_classify_unknown_compactness_shows_its_bound() -> None:
    """Test unknown verdicts carry the bound they were searched to."""
    exit_code, out, _ = _run("classify", "fc-singletons", "--bound", "8", "--window", "6")

    assert exit_code == 0
    assert "Q: unknown (bound 8)\n" in out


def test_geomeq_is_deterministic() -> None:
    """Test the same seed gives the same report, with the sampled checks."""
    first = _run("geomeq", "b2-c1", "b3-c1", "--samples", "5", "--seed", "9", "--machine")
    second = _run("geomeq", "b2-c1", "b3-c1", "--samples", "5", "--seed", "9", "--machine")

    assert first == second
    exit_code, out, _ = first
    assert exit_code == 0
    assert out.startswith("verdict\tequivalent\n")
    assert "radical checked\t25\n" in out
    assert "quasi-identities mismatches\t0\n" in out


def test_geomeq_without_shared_constants() -> None:
    """Test algebras with different constants are an error."""
    exit_code, _, err = _run("geomeq", "b2-c1", "fc-trivial")

    assert exit_code == 2
    assert err.startswith("boolgeo: error: constants")


def test_qident() -> None:
    """Test a failing quasi-identity prints its counterexample."""
    exit_code, out, _ = _run("qident", "fc-point", "--formula", "x1 <= c1 -> x1 = c1")

    assert exit_code == 1
    assert out == "x1 <= c1 -> x1 = c1\nholds in fc-point: no\ncounterexample x1=0\n"


def test_ek_verify() -> None:
    """Test the built-in E_1 fixture passes with its single survivor."""
    exit_code, out, _ = _run("ek", "verify", "chain-e1", "--bound", "5", "--machine")

    assert exit_code == 0
    assert "survivor\tx1=1\n" in out
    assert out.endswith("result\tpass\n")

def test_ek_verify_plain_text_names_the_window() -> None:
    """Test the plain report states the payload window of the survivor check."""
    exit_code, out, _ = _run("ek", "verify", "chain-e1", "--bound", "5")

    assert exit_code == 0
    assert out == (
        "fixture chain-e1 (k = 1)\n"
        "bound 5, window 4\n"
        "least prefix solutions 5\n"
        "survivors with every payload natural below 4: 1\n"
        "  x1=1\n"
        "pass\n"
    )



def test_parse_errors_report_their_location(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a syntax error exits with 2 and names the file, line and column."""
    path = write_file("bad.sys", "include-algebra b2-c1\nvars x1\nx1 + * c1 = 0\n")

    exit_code, out, err = _run("solve", str(path))

    assert exit_code == 2
    assert out == ""
    assert err == f"{path}:3:6: expected a term but found '*'\n"


def test_missing_inputs(tmp_path: pathlib.Path) -> None:
    """Test missing files and unknown algebras exit with 2."""
    missing = tmp_path / "missing.sys"

    exit_code, _, err = _run("solve", str(missing))
    assert exit_code == 2
    assert err == f"boolgeo: error: file {missing} does not exist\n"

    exit_code, _, err = _run("classify", "no-such-algebra")
    assert exit_code == 2
    assert "no-such-algebra" in err


def test_system_without_algebra(write_file: Callable[[str, str], pathlib.Path]) -> None:
    """Test a system needs an algebra from the file or the command line."""
    path = write_file("a.sys", "vars x1\nx1 = 1\n")

    exit_code, _, err = _run("solve", str(path))

    assert exit_code == 2
    assert "no algebra is bound" in err


def test_main_exits_with_the_run_code(capsys: pytest.CaptureFixture) -> None:
    """Test the entry point exits with the code of the subcommand."""
    with pytest.raises(SystemExit) as excinfo:
        main(["qident", "b2-c1", "--formula", "x1 <= c1 -> x1 * ~c1 = 0", "--machine"])

    assert excinfo.value.code == 0
    assert capsys.readouterr().out == "formula\tx1 <= c1 -> x1 * ~c1 = 0\nholds\tyes\n"


def _acceptance_transcript(seed: int) -> str:
    transcript = io.StringIO()
    for line in (SCRIPTS / "acceptance.commands").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        exit_code, out, err = _run(*shlex.split(line), "--seed", str(seed))
        transcript.write(f"$ boolgeo {line}\n{out}{err}exit {exit_code}\n")
    return transcript.getvalue()


def test_acceptance_transcript_is_deterministic(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test two runs of the acceptance commands with the same seed give the same transcript."""
    monkeypatch.chdir(SCRIPTS)

    first = _acceptance_transcript(seed=0)
    second = _acceptance_transcript(seed=0)

    assert first == second
    assert first.count("$ boolgeo ") == 26
    assert "exit 2\n" not in first
