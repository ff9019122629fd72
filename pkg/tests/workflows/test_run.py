import json
import logging
from fractions import Fraction
from unittest.mock import patch

import pytest

from rieszsup.errors import PreconditionViolated
from rieszsup.workflows import CheckWorkflow, OutputFormat, RunConfig, Subcommand, run
from rieszsup.workflows.run import repeat_probabilities

BOUND_YAML = """\
space: {weights: ["1/4", "1/4", "1/4", "1/4"]}
weights_seq: {cycle: [["1", "1", "1", "1"]]}
events_seq: {cycle: [[0, 1], [0, 2]]}
checkpoints: [1, 2, 3, 200]
"""


@pytest.fixture
def elements_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('[["2", "0", "inf"], ["1", "inf", "-2"]]')
    return path


@pytest.fixture
def bound_file(tmp_path):
    path = tmp_path / "bound.yaml"
    path.write_text(BOUND_YAML)
    return path


def test_config_validation():
    """
    Tests the seed range, positive trials and required inputs.
    """
    config = RunConfig("borel-cantelli", output_format="structured")
    assert config.subcommand is Subcommand.BOREL_CANTELLI
    assert config.output_format is OutputFormat.STRUCTURED and config.structured
    for kwargs in ({"seed": -1}, {"seed": 2**64}, {"trials": 0}):
        with pytest.raises(PreconditionViolated):
            RunConfig(Subcommand.CHECK, **kwargs)
    with pytest.raises(PreconditionViolated, match="needs an input file"):
        RunConfig(Subcommand.BOUND)
    with pytest.raises(ValueError):
        RunConfig("integrate")


def test_star(elements_file):
    """
    Tests the star of each element in both output formats.
    """
    config = RunConfig(Subcommand.STAR, elements_file, output_format="structured")
    status, text = run(config)
    assert status == 0
    assert json.loads(text)[0] == {"x": ["2", "0", "inf"], "star": ["1/2", "0", "0"]}
    status, text = run(RunConfig(Subcommand.STAR, elements_file))
    assert "(1/2, 0, 0)" in text


def test_decompose(elements_file):
    """
    Tests the finite and infinite parts in structured output.
    """
    config = RunConfig(Subcommand.DECOMPOSE, elements_file, output_format="structured")
    status, text = run(config)
    assert status == 0
    assert json.loads(text)[1] == {
        "x": ["1", "inf", "-2"],
        "finite": ["1", "0", "-2"],
        "infinite": ["0", "inf", "0"],
    }


def test_bound(bound_file, caplog):
    """
    Tests the bound and the corollary, which ignores the given weights.
    """
    config = RunConfig(Subcommand.BOUND, bound_file, output_format="structured")
    status, text = run(config)
    doc = json.loads(text)
    assert status == 0 and doc["verdict"] is True
    assert doc["lhs"] == ["3/4"] * 4

    with caplog.at_level(logging.WARNING):
        status, text = run(RunConfig(Subcommand.BOUND, bound_file, corollary=True))
    assert status == 0
    assert "Ignoring weights_seq" in caplog.text
    assert "displayed form : matches" in text


def test_borel_cantelli():
    """
    Tests the Borel-Cantelli dispatch and its exit status.
    """
    config = RunConfig(
        Subcommand.BOREL_CANTELLI,
        probabilities=(Fraction(1, 2),) * 3,
        output_format="structured",
    )
    status, text = run(config)
    assert status == 0
    assert json.loads(text)["certificate"] == "3/4"


def test_check_matches_workflow():
    """
    Tests that the check dispatch reports what the workflow computes.
    """
    config = RunConfig(
        Subcommand.CHECK,
        lemmas=("YY2-A",),
        trials=3,
        seed=5,
        output_format="structured",
    )
    status, text = run(config)
    assert status == 0
    assert json.loads(text) == CheckWorkflow(["YY2-A"], 3, 5).run()


@pytest.mark.parametrize("save", [True, False])
def test_check_save_writes_report(save):
    """
    Tests that the check dispatch persists its report only when asked to.
    """
    config = RunConfig(Subcommand.CHECK, lemmas=("YY2-B",), trials=2, seed=1, save=save)
    with patch(
        "rieszsup.workflows.check_workflow.CheckWorkflow.save_results"
    ) as mock_save:
        status, _ = run(config)
    assert status == 0
    assert mock_save.called is save


def test_repeat_probabilities():
    """
    Tests that a single p is repeated to the requested depth.
    """
    assert repeat_probabilities(["1/2"], 3) == ("1/2",) * 3
    assert repeat_probabilities(["1/2", "1/3"], None) == ("1/2", "1/3")
    assert repeat_probabilities(["1/2", "1/3"], 2) == ("1/2", "1/3")
    with pytest.raises(PreconditionViolated, match="does not match"):
        repeat_probabilities(["1/2", "1/3"], 3)
