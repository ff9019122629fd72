import json

import pytest
from typer.testing import CliRunner

from rieszsup.cli.main import app

runner = CliRunner()


@pytest.fixture
def elements_file(tmp_path):
    path = tmp_path / "x.yaml"
    path.write_text('- ["2", "0", "inf"]\n- ["-1/2", "3", "0"]\n')
    return path


def test_star_structured(elements_file):
    """
    Tests the 'star' command with structured output.
    """
    result = runner.invoke(app, ["star", str(elements_file), "--format", "structured"])
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc[0]["star"] == ["1/2", "0", "0"]
    assert doc[1]["star"] == ["-2", "1/3", "0"]


def test_decompose_text(elements_file):
    """
    Tests the 'decompose' command's table.
    """
    result = runner.invoke(app, ["decompose", str(elements_file)])
    assert result.exit_code == 0
    assert "x^inf" in result.stdout
    assert "(0, 0, inf)" in result.stdout


def test_malformed_input(tmp_path):
    """
    Tests that parse errors exit with status 1 and name the field.
    """
    path = tmp_path / "bad.json"
    path.write_text('[["1", 0.5]]')
    result = runner.invoke(app, ["star", str(path)])
    assert result.exit_code == 1
    assert "[0][1]" in result.output
    missing = runner.invoke(app, ["decompose", str(tmp_path / "none.json")])
    assert missing.exit_code == 1
    assert "cannot read file" in missing.output
