"""Tests for the check suites, report writing and exports."""

import json
from unittest.mock import patch

import pytest

from quivercanon import RunConfig
from quivercanon.errors import CrystalError, QuasiRError
from quivercanon.suites import (
    RunContext,
    crystal_graph,
    export_crystal_graph,
    export_tables,
    graph_to_dot,
    resolve_inputs,
    run_suite,
    run_suites,
)


@pytest.fixture
def kronecker_file(tmp_path):
    path = tmp_path / "kronecker.yaml"
    path.write_text("vertices: [1, 2]\nedges:\n  - [1, 2]\n  - [1, 2]\n")
    return path


@pytest.fixture
def sl2_run(sl2_file, tmp_path):
    def make(**kwargs) -> RunConfig:
        kwargs.setdefault("out_dir", tmp_path / "out")
        return RunConfig(quiver_path=sl2_file, **kwargs)

    return make


class TestResolveInputs:
    """Test quiver and weight resolution."""

    def test_weight_from_framing(self, a2_file, tmp_path):
        context = resolve_inputs(RunConfig(quiver_path=a2_file, out_dir=tmp_path))
        assert context.weight.entries == (1, 1)
        assert context.weight2 is None
        assert context.order == ("1", "2")

    def test_explicit_weight_wins(self, a2_file, tmp_path):
        context = resolve_inputs(RunConfig(quiver_path=a2_file, weight=[2, 0], order=["2", "1"], out_dir=tmp_path))
        assert context.weight.entries == (2, 0)
        assert context.order == ("2", "1")

    def test_bad_order(self, a2_file, tmp_path):
        with pytest.raises(ValueError):
            resolve_inputs(RunConfig(quiver_path=a2_file, order=["1", "3"], out_dir=tmp_path))

    def test_missing_weight(self, tmp_path):
        path = tmp_path / "bare.yaml"
        path.write_text("vertices: [1]\nedges: []\n")
        with pytest.raises(ValueError, match="dominant weight"):
            resolve_inputs(RunConfig(quiver_path=path, suites=["crystal"], out_dir=tmp_path))

    def test_corpus_suites_need_no_quiver(self, tmp_path):
        context = resolve_inputs(RunConfig(suites=["signs", "mutation"], out_dir=tmp_path))
        assert context.quiver is None


class TestRunSuites:
    """Test suite selection and report assembly."""

    def test_quasi_r_off_unless_second_weight_configured(self, sl2_run):
        report = run_suites(sl2_run(weight=[1], suites=["shadow", "quasi_r"], height=2))
        assert [suite.suite for suite in report.suites] == ["shadow"]

    def test_suites_run_in_fixed_order(self, sl2_run):
        report = run_suites(sl2_run(weight=[2], suites=["bases", "relations"], height=2))
        assert [suite.suite for suite in report.suites] == ["relations", "bases"]
        assert report.passed

    def test_quasi_r(self, sl2_run):
        report = run_suites(sl2_run(weight=[1], weight2=[1], suites=["quasi_r"], height=2))
        (suite,) = report.suites
        assert suite.passed and not suite.degraded
        assert any(entry.check == "Theta_0 = Id" for entry in suite.entries)
        assert any("raise_first direction rejected" in note for note in suite.notes)

    def test_quasi_r_degrades(self, sl2_run):
        config = sl2_run(weight=[1], weight2=[1], suites=["quasi_r"], height=2)
        with patch("quivercanon.suites.QuasiRSolver.block", side_effect=QuasiRError("no solution", (0,))):
            report = run_suites(config)
        (suite,) = report.suites
        assert suite.passed
        assert suite.degraded
        assert report.passed

    def test_signs_suite(self, tmp_path):
        report = run_suites(RunConfig(suites=["signs"], sign_samples=200, seed=11, out_dir=tmp_path))
        (suite,) = report.suites
        assert suite.passed
        assert len(suite.entries) == 2
        assert suite.notes == ["seed 11"]

    def test_mutation_suite(self, tmp_path):
        report = run_suites(RunConfig(suites=["mutation"], mutation_samples=20, out_dir=tmp_path))
        assert report.suites[0].passed
        assert len(report.suites[0].entries) == 60

    def test_crystal_suite_records_sl2_extras(self, sl2_run):
        report = run_suites(sl2_run(weight=[2], suites=["crystal"], height=3))
        checks = {entry.check for entry in report.suites[0].entries}
        assert "sl2 weight multiplicities are one" in checks
        assert report.passed

    def test_twisted_suite_notes_control(self, a2_file, tmp_path):
        report = run_suites(RunConfig(quiver_path=a2_file, suites=["twisted"], height=2, out_dir=tmp_path))
        assert report.passed
        note = report.suites[0].notes[0]
        assert note.startswith("untwisted control:")
        assert not note.startswith("untwisted control: 0/")

    def test_kronecker_bases_and_twisted(self, kronecker_file, tmp_path):
        config = RunConfig(
            quiver_path=kronecker_file,
            weight=[1, 0],
            suites=["bases", "twisted"],
            height=3,
            out_dir=tmp_path,
        )
        report = run_suites(config)
        assert [suite.suite for suite in report.suites] == ["twisted", "bases"]
        for suite in report.suites:
            assert suite.passed, [(e.check, e.content) for e in suite.failures]
        checks = {entry.check for entry in report.suites[1].entries}
        assert "canonical vectors are bar-invariant" in checks
        assert "canonical vector matches the exhaustive search" not in checks

    def test_bases_suite_checks_tensor_canonical_basis(self, sl2_run):
        config = sl2_run(weight=[1], weight2=[1], suites=["bases"], height=2)
        report = run_suites(config)
        (suite,) = report.suites
        tensor = [e for e in suite.entries if e.check.startswith("tensor canonical")]
        assert {tuple(e.content) for e in tensor} == {(0,), (1,), (2,)}
        assert all(e.passed for e in tensor)
        assert report.passed

    def test_check_exception_becomes_failed_entry(self, sl2_run):
        config = sl2_run(weight=[2], suites=["crystal"], height=2)
        with patch("quivercanon.suites.crystal_restriction", side_effect=CrystalError("boom")):
            report = run_suites(config)
        failures = report.suites[0].failures
        assert failures
        assert all(f.check == "string replay reaches the node" for f in failures)
        assert failures[0].detail == "CrystalError: boom"
        assert not report.passed

    def test_reports_are_deterministic(self, a2_file, tmp_path):
        manifests = []
        for name in ("first", "second"):
            out = tmp_path / name
            run_suite(RunConfig(quiver_path=a2_file, suites=["crystal", "signs"], sign_samples=50, height=2, out_dir=out))
            manifests.append(json.loads((out / "manifest.json").read_text()))
        assert manifests[0] == manifests[1]


class TestExports:
    """Test the crystal graph and table exports."""

    def test_sl2_graph_is_a_path(self, sl2_run):
        graph = crystal_graph(resolve_inputs(sl2_run(weight=[2], height=4)))
        assert [node.key for node in graph.nodes] == ["()", "(1^1)", "(1^2)"]
        assert [(e.source, e.target, e.vertex) for e in graph.edges] == [
            ("()", "(1^1)", "1"),
            ("(1^1)", "(1^2)", "1"),
        ]

    def test_zero_weight_is_a_single_node(self, sl2_run):
        graph = crystal_graph(resolve_inputs(sl2_run(weight=[0], height=3)))
        assert len(graph.nodes) == 1
        assert not graph.edges

    def test_a2_fundamental(self, a2_file, tmp_path):
        config = RunConfig(quiver_path=a2_file, weight=[1, 0], height=3, out_dir=tmp_path)
        graph = export_crystal_graph(config)
        assert [e.vertex for e in graph.edges] == ["1", "2"]
        assert len(graph.nodes) == 3
        dot = (tmp_path / "crystal.dot").read_text()
        assert dot == graph_to_dot(graph)
        assert '"()" -> "(1^1)" [label="1"];' in dot

    def test_sl2_dimension_table(self, sl2_run, tmp_path):
        rows = export_tables(sl2_run(weight=[3], height=4))
        assert [row.dimension for row in rows] == [1, 1, 1, 1, 0]
        assert all(row.dimension == row.node_count for row in rows)
        transitions = tmp_path / "out" / "transitions"
        assert sorted(p.name for p in transitions.iterdir()) == ["nu_0.csv", "nu_1.csv", "nu_2.csv", "nu_3.csv"]

    def test_rho_zero_weight_row(self, a2_file, tmp_path):
        rows = export_tables(RunConfig(quiver_path=a2_file, height=2, out_dir=tmp_path))
        zero = next(row for row in rows if row.content == [1, 1])
        assert zero.dimension == 2

    def test_context_requires_quiver(self, tmp_path):
        with pytest.raises(ValueError, match="quiver file"):
            RunContext(RunConfig(out_dir=tmp_path)).require()
