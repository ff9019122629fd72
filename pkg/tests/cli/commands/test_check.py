import json
from pathlib import Path
from unittest.mock import patch

from typer.testing import CliRunner

from rieszsup.atoms import Element
from rieszsup.cli.main import app
from rieszsup.workflows import LemmaSuite, Subcommand
from rieszsup.workflows.suites import outcome

runner = CliRunner()


def _fails(gen):
    return outcome({"x": Element.of(gen.integer(0, 3))}, holds=False)


def test_list_suites():
    """
    Tests 'check --list'.
    """
    result = runner.invoke(app, ["check", "--list"])
    assert result.exit_code == 0
    assert result.stdout.startswith("YY2-A")
    assert "M7-cert" in result.stdout


def test_check_is_deterministic():
    """
    Tests that the same seed gives byte-identical reports.
    """
    args = ["check", "-l", "YY2-H", "-l", "M5", "-t", "5", "-s", "42"]
    args += ["-f", "structured"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert [s["name"] for s in doc["suites"]] == ["YY2-H", "M5"]
    assert doc["seed"] == 42 and doc["all_passed"] is True


def test_unknown_lemma():
    """
    Tests that an unregistered suite exits with status 1.
    """
    result = runner.invoke(app, ["check", "-l", "nope"])
    assert result.exit_code == 1
    assert "unknown lemma nope" in result.output


def test_negative_seed():
    """
    Tests that the seed must be an unsigned 64-bit integer.
    """
    result = runner.invoke(app, ["check", "--seed=-3"])
    assert result.exit_code == 1


@patch.dict(
    "rieszsup.workflows.check_workflow.ALL_LEMMA_SUITES",
    {"fails": LemmaSuite("fails", "never holds", _fails)},
)
def test_failing_suite_exits_with_one():
    """
    Tests that a failing trial gives status 1 and prints its counterexample.
    """
    result = runner.invoke(app, ["check", "-l", "fails", "-t", "2"])
    assert result.exit_code == 1
    assert "FAIL  fails    0/2" in result.stdout
    assert "first failure at trial 0" in result.stdout


@patch(
    "rieszsup.workflows.check_workflow.CheckWorkflow.save_results",
    return_value=Path("artifacts/check_reports/check_seed1_trials1.json"),
)
def test_save(mock_save):
    """
    Tests that '--save' writes the report and still prints it.
    """
    args = ["check", "-l", "YY2-B", "-t", "1", "-s", "1", "--save"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0
    mock_save.assert_called_once()
    assert "PASS  YY2-B    1/1" in result.stdout


@patch("rieszsup.cli.commands.check.execute")
def test_check_dispatches_through_run_config(mock_execute):
    """
    Tests that the command hands one RunConfig to the shared dispatcher.
    """
    args = ["check", "-l", "M5", "-t", "3", "-s", "9", "--save"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0
    (config,), _ = mock_execute.call_args
    assert config.subcommand is Subcommand.CHECK
    assert config.lemmas == ("M5",)
    assert (config.trials, config.seed, config.save) == (3, 9, True)
