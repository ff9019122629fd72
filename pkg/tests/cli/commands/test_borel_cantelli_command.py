import json

from typer.testing import CliRunner

from rieszsup.cli.main import app

runner = CliRunner()


def test_repeated_probability():
    """
    Tests one probability repeated with --depth.
    """
    result = runner.invoke(
        app, ["borel-cantelli", "-p", "1/2", "-n", "3", "-f", "structured"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["certificate"] == "3/4"
    assert doc["union_value"] == "7/8"


def test_explicit_probabilities():
    """
    Tests p_1..p_N given one by one, in text form.
    """
    result = runner.invoke(app, ["borel-cantelli", "-p", "1/2", "-p", "1/4"])
    assert result.exit_code == 0
    assert "9/16" in result.stdout
    assert "verdict            : True" in result.stdout


def test_invalid_probabilities():
    """
    Tests bad probabilities and a depth that does not match.
    """
    for args in (["-p", "1"], ["-p", "half"], ["-p", "1/2", "-p", "1/3", "-n", "3"]):
        result = runner.invoke(app, ["borel-cantelli", *args])
        assert result.exit_code == 1
        assert "Error" in result.output
    result = runner.invoke(app, ["borel-cantelli", "-p", "1/2", "-n", "15"])
    assert result.exit_code == 1
