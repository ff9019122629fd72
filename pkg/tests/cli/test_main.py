from typer.testing import CliRunner

from rieszsup.cli.main import app

runner = CliRunner()


def test_help_lists_commands():
    """
    Tests that every command is registered on the main app.
    """
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for name in ("decompose", "star", "bound", "borel-cantelli", "check"):
        assert name in result.stdout


def test_unknown_command():
    """
    Tests that an unknown command is a usage error.
    """
    result = runner.invoke(app, ["integrate"])
    assert result.exit_code == 2
