"""Tests for the command-line interface."""

import json
from unittest.mock import patch

import pytest
import yaml
from typer.testing import CliRunner

from cli.main import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, app, build_config
from quivercanon.schemas import CheckEntry, SuiteReport


@pytest.fixture
def runner():
    return CliRunner()


class TestBuildConfig:
    """Test merging of config files and flags."""

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("height: 5\nseed: 1\nweight: [1, 0]\n")
        config = build_config(path, weight="0,1", seed=9, order="2,1")
        assert config.height == 5
        assert config.seed == 9
        assert config.weight == [0, 1]
        assert config.order == ["2", "1"]

    def test_without_file(self):
        config = build_config(None, suites=["crystal"], sign_samples=10)
        assert config.suites == ["crystal"]
        assert config.sign_samples == 10


class TestCheckCommand:
    """Test the check command and its exit codes."""

    def test_a2_passes(self, runner, a2_file, tmp_path):
        out = tmp_path / "reports"
        result = runner.invoke(
            app,
            ["check", "-q", str(a2_file), "--height", "2", "-s", "crystal", "-s", "bases", "-o", str(out)],
        )
        assert result.exit_code == EXIT_OK, result.output
        assert "PASS crystal" in result.stdout
        assert "PASS bases" in result.stdout
        report = json.loads((out / "report.json").read_text())
        assert report["weight"] == [1, 1]
        assert [suite["suite"] for suite in report["suites"]] == ["crystal", "bases"]
        assert report["conventions"]["vertex_order"] == ["1", "2"]
        assert (out / "suites" / "crystal.json").exists()
        manifest = json.loads((out / "manifest.json").read_text())
        assert "report.json" in manifest

    def test_sl2_all_suites(self, runner, sl2_file, tmp_path):
        out = tmp_path / "reports"
        result = runner.invoke(
            app,
            ["check", "-q", str(sl2_file), "-w", "1", "--weight2", "1", "--height", "2", "--seed", "3", "-o", str(out)],
        )
        assert result.exit_code == EXIT_OK, result.output
        report = json.loads((out / "report.json").read_text())
        names = [suite["suite"] for suite in report["suites"]]
        assert names == ["relations", "twisted", "signs", "mutation", "crystal", "bases", "shadow", "quasi_r"]
        assert report["seed"] == 3

    def test_malformed_quiver(self, runner, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("vertices: [1]\nedges:\n  - [1, 3]\n")
        result = runner.invoke(app, ["check", "-q", str(path), "-w", "1", "-o", str(tmp_path / "out")])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "Input error" in result.output

    def test_non_dominant_weight(self, runner, a2_file, tmp_path):
        result = runner.invoke(app, ["check", "-q", str(a2_file), "-w", "1,-1", "-o", str(tmp_path / "out")])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_missing_quiver(self, runner, tmp_path):
        result = runner.invoke(app, ["check", "-s", "crystal", "-o", str(tmp_path / "out")])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_unknown_suite(self, runner, a2_file, tmp_path):
        result = runner.invoke(app, ["check", "-q", str(a2_file), "-s", "nope", "-o", str(tmp_path / "out")])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_failing_suite_exit_code(self, runner, a2_file, tmp_path):
        """A suite report with a failed entry maps to exit code 1."""
        failing = SuiteReport(suite="shadow", passed=False, entries=[CheckEntry(check="x", passed=False)])
        with patch.dict("quivercanon.suites.SUITE_RUNNERS", {"shadow": lambda context: failing}):
            result = runner.invoke(app, ["check", "-q", str(a2_file), "-s", "shadow", "-o", str(tmp_path / "out")])
        assert result.exit_code == EXIT_CHECK_FAILED
        assert "FAIL shadow" in result.stdout

    def test_config_file(self, runner, a2_file, tmp_path):
        out = tmp_path / "reports"
        config = tmp_path / "run.yaml"
        config.write_text(
            yaml.safe_dump({"quiver_path": str(a2_file), "height": 2, "suites": ["shadow"], "out_dir": str(out)})
        )
        result = runner.invoke(app, ["check", "-c", str(config)])
        assert result.exit_code == EXIT_OK, result.output
        assert (out / "suites" / "shadow.json").exists()


class TestExportCommands:
    """Test the crystal and tables exports."""

    def test_crystal(self, runner, a2_file, tmp_path):
        out = tmp_path / "graph"
        result = runner.invoke(app, ["crystal", "-q", str(a2_file), "--height", "4", "-o", str(out)])
        assert result.exit_code == EXIT_OK, result.output
        assert "8 nodes" in result.stdout
        dot = (out / "crystal.dot").read_text()
        assert dot.startswith("digraph crystal {")
        graph = json.loads((out / "crystal.json").read_text())
        assert graph["nodes"][0]["key"] == "()"
        assert len(graph["edges"]) == 8

    def test_tables(self, runner, a2_file, tmp_path):
        out = tmp_path / "tables"
        result = runner.invoke(app, ["tables", "-q", str(a2_file), "--height", "2", "-o", str(out)])
        assert result.exit_code == EXIT_OK, result.output
        lines = (out / "dimensions.csv").read_text().splitlines()
        assert lines[0] == "content,weight,dimension,node_count"
        assert '"(1, 1)","(0, 0)",2,2' in lines
        transition = (out / "transitions" / "nu_1_1.csv").read_text().splitlines()
        assert transition[0] == ',"(1^1,2^1)","(2^1,1^1)"'
        assert not (out / "transitions" / "nu_2_0.csv").exists()


class TestOtherCommands:
    """Test mutate, signs and init."""

    def test_mutate(self, runner, a2_file):
        result = runner.invoke(app, ["mutate", "-q", str(a2_file), "-t", "2"])
        assert result.exit_code == EXIT_OK, result.output
        data = json.loads(result.stdout)
        assert data["sequence"] == ["1"]
        assert data["cocharacter"] == {"1": -1, "2": 0}
        assert data["arrow_weights"] == [["1->2", 1]]

    def test_mutate_unknown_target(self, runner, a2_file):
        result = runner.invoke(app, ["mutate", "-q", str(a2_file), "-t", "9"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_signs(self, runner, tmp_path):
        out = tmp_path / "signs"
        result = runner.invoke(app, ["signs", "-n", "50", "--seed", "4", "-o", str(out)])
        assert result.exit_code == EXIT_OK, result.output
        assert "PASS signs: 50 samples, seed 4" in result.stdout
        report = json.loads((out / "suites" / "signs.json").read_text())
        assert report["notes"] == ["seed 4"]

    def test_init(self, runner, tmp_path):
        path = tmp_path / "quivercanon.yaml"
        result = runner.invoke(app, ["init", "-c", str(path)])
        assert result.exit_code == EXIT_OK, result.output
        assert path.exists()
        assert "height: 4" in result.stdout
