import importlib
import json
from unittest.mock import patch

import pytest
from typer.testing import CliRunner

from rieszsup.atoms import BandProjection, Element
from rieszsup.bounds import BoundReport, Certificate
from rieszsup.cli.main import app

runner = CliRunner()

BOUND_YAML = """\
space: {weights: ["1/4", "1/4", "1/4", "1/4"]}
events_seq: {cycle: [[0, 1], [0, 2]]}
checkpoints: [1, 2, 3, 200]
"""


@pytest.fixture
def bound_file(tmp_path):
    path = tmp_path / "bound.yaml"
    path.write_text(BOUND_YAML)
    return path


def test_bound_command(bound_file):
    """
    Tests the 'bound' command on two dependent events.
    """
    result = runner.invoke(app, ["bound", str(bound_file), "-f", "structured"])
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["rhs_limsup"] == ["2/3"] * 4
    assert doc["verdict"] is True


def test_bound_corollary(bound_file):
    """
    Tests the 'bound --corollary' command with float diagnostics.
    """
    result = runner.invoke(
        app, ["bound", str(bound_file), "--corollary", "--float-threshold", "100"]
    )
    assert result.exit_code == 0
    assert "displayed form : matches" in result.stdout
    assert "n (float64)" in result.stdout


@patch.object(importlib.import_module("rieszsup.workflows.run"), "theorem_m7")
def test_failed_verdict_exits_with_one(mock_theorem, bound_file):
    """
    Tests that a false verdict gives exit status 1 and lists the failure.
    """
    one, zero = Element.of(1), Element.zeros(1)
    mock_theorem.return_value = BoundReport(
        lhs=zero,
        projection=BandProjection.full(1),
        rhs_samples=((1, one),),
        tail_start=1,
        tail_samples=((1, one),),
        rhs_limsup=one,
        certificates=(Certificate(1, 1, zero, one),),
        finite_part_vanishes=True,
    )
    result = runner.invoke(app, ["bound", str(bound_file)])
    assert result.exit_code == 1
    assert "FAILED (q=1, n=1)" in result.stdout


def test_bound_document_error(tmp_path):
    """
    Tests that an invalid document is reported with its field path.
    """
    path = tmp_path / "bound.yaml"
    path.write_text(BOUND_YAML.replace("[0, 2]", "[0, 9]"))
    result = runner.invoke(app, ["bound", str(path)])
    assert result.exit_code == 1
    assert "events_seq.cycle[1][1]" in result.output
