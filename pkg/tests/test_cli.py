"""CLI subcommands through the click runner (in-process service client)."""

from __future__ import annotations

import json

from click.testing import CliRunner

from krmodels.cli import main


def run(*args):
    return CliRunner().invoke(main, args)


def test_chain_prints_the_golden_chain():
    result = run("chain", "--type", "A", "--rank", "3", "--lambda", "3,2")
    assert result.exit_code == 0
    assert "(2,3),(1,3) | (2,3),(1,3) | (1,2),(1,3)" in result.output
    assert "valid: True" in result.output


def test_chain_json_format_parses():
    result = run("chain", "--type", "B", "--rank", "3", "--lambda", "1,1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["length"] == 10 and payload["valid"]


def test_map_golden():
    result = run("map", "--type", "A", "--rank", "3", "--lambda", "3,2", "--J", "1,2,3,5")
    assert result.exit_code == 0
    assert "sfill=[2,3][1,2][1]" in result.output
    assert "fill=[2,3][2,1][1]" in result.output


def test_invert_round_trips_the_map_output():
    result = run("invert", "--type", "A", "--rank", "3", "--lambda", "3,2",
                 "--element", "[2,3][1,2][1]")
    assert result.exit_code == 0
    assert "J=1,2,3,5" in result.output


def test_invert_accepts_slash_syntax_and_trace():
    result = run("invert", "--type", "C", "--rank", "2", "--lambda", "1",
                 "--element", "2b", "--trace")
    assert result.exit_code == 0
    assert result.output.startswith("J=1,2")
    assert "bruhat-up" in result.output


def test_enumerate_text_and_counts():
    result = run("enumerate", "--type", "C", "--rank", "2", "--lambda", "1")
    assert result.exit_code == 0
    assert "count 4" in result.output
    assert "J=-" in result.output  # the empty subset renders as a dash


def test_roundtrip_reports_counts():
    result = run("roundtrip", "--type", "C", "--rank", "2", "--lambda", "1")
    assert result.exit_code == 0
    assert "|A(lambda)| = 4, |B^(lambda')| = 4" in result.output
    assert "all round trips pass" in result.output


def test_verify_runs_the_qbg_oracle():
    result = run("verify", "--type", "A", "--rank", "3", "--checks", "qbg")
    assert result.exit_code == 0
    assert "all checks passed" in result.output


def test_qbg_dot_output():
    result = run("qbg", "--type", "A", "--rank", "2", "--format", "dot")
    assert result.exit_code == 0
    assert result.output.startswith("digraph qbg {")


def test_validation_failures_exit_two():
    result = run("chain", "--type", "D", "--rank", "2", "--lambda", "1")
    assert result.exit_code == 2
    assert "error:" in result.output


def test_usage_errors_exit_one():
    result = run("chain", "--type", "E", "--rank", "3", "--lambda", "1")
    assert result.exit_code == 1
    result = run("map", "--type", "A", "--rank", "3", "--lambda", "3,2", "--J", "x,y")
    assert result.exit_code == 1


def test_byte_identical_reruns():
    args = ("enumerate", "--type", "B", "--rank", "2", "--lambda", "1", "--format", "json")
    assert run(*args).output == run(*args).output
