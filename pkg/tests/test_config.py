"""Tests for run configuration and report manifests."""

import json

import pytest
import yaml

from quivercanon.config import SUITES, RunConfig, parse_order, parse_vector
from quivercanon.utils.hashing import generate_manifest, verify_manifest, write_manifest


class TestParsing:
    """Test command-line vector parsing."""

    @pytest.mark.parametrize("text", ["1,2", "(1, 2)", "[1 2]", " 1 , 2 "])
    def test_parse_vector(self, text):
        assert parse_vector(text) == [1, 2]

    def test_parse_vector_rejects_words(self):
        with pytest.raises(ValueError, match="Invalid integer vector"):
            parse_vector("1,a")

    def test_parse_order(self):
        assert parse_order("2,1") == ["2", "1"]
        assert parse_order("(a b)") == ["a", "b"]


class TestRunConfig:
    """Test loading, merging and validating run configurations."""

    def test_defaults(self):
        config = RunConfig()
        assert config.height == 4
        assert config.suites == list(SUITES)
        assert config.seed == 0
        assert not config.run_quasi_r

    def test_quasi_r_follows_weight2(self):
        assert RunConfig(weight2=[1]).run_quasi_r
        assert not RunConfig(weight2=[1], quasi_r=False).run_quasi_r
        assert RunConfig(quasi_r=True).run_quasi_r

    def test_from_yaml(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("quiver_path: quivers/a2.yaml\nweight: '1,1'\norder: '2,1'\nheight: 3\nout_dir: out\n")
        config = RunConfig.from_yaml(path)
        assert config.weight == [1, 1]
        assert config.order == ["2", "1"]
        assert config.height == 3
        assert config.quiver_path.name == "a2.yaml"
        assert config.out_dir.name == "out"

    def test_from_yaml_unknown_key(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("hieght: 3\n")
        with pytest.raises(ValueError, match="Unknown config keys"):
            RunConfig.from_yaml(path)

    def test_from_yaml_missing(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            RunConfig.from_yaml(tmp_path / "missing.yaml")

    def test_from_yaml_not_a_mapping(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ValueError, match="mapping"):
            RunConfig.from_yaml(path)

    def test_merged_skips_none(self):
        config = RunConfig(height=3, seed=5).merged({"height": None, "seed": 7})
        assert config.height == 3
        assert config.seed == 7

    def test_save_and_reload(self, tmp_path):
        config = RunConfig(weight=[1, 0], height=2, out_dir=tmp_path / "reports")
        path = tmp_path / "nested" / "run.yaml"
        config.save_yaml(path)
        data = yaml.safe_load(path.read_text())
        assert data["out_dir"] == str(tmp_path / "reports")
        assert RunConfig.from_yaml(path) == config

    def test_load_or_create_writes_defaults(self, tmp_path):
        path = tmp_path / "quivercanon.yaml"
        config = RunConfig.load_or_create(path)
        assert path.exists()
        assert config == RunConfig()
        assert RunConfig.load_or_create(path) == config

    def test_validate_creates_out_dir(self, tmp_path):
        config = RunConfig(out_dir=tmp_path / "a" / "b")
        config.validate()
        assert config.out_dir.is_dir()

    @pytest.mark.parametrize(
        "kwargs, message",
        [
            ({"height": -1}, "height"),
            ({"suites": ["bogus"]}, "Unknown suites"),
            ({"sign_samples": 0}, "positive"),
            ({"weight": [1, -1]}, "not dominant"),
        ],
    )
    def test_validate_rejects(self, tmp_path, kwargs, message):
        config = RunConfig(out_dir=tmp_path, **kwargs)
        with pytest.raises(ValueError, match=message):
            config.validate()


class TestManifest:
    """Test report manifests."""

    def test_manifest_round_trip(self, tmp_path):
        (tmp_path / "suites").mkdir()
        (tmp_path / "report.json").write_text("{}")
        (tmp_path / "suites" / "crystal.json").write_text("[]")
        path = write_manifest(tmp_path)
        manifest = json.loads(path.read_text())
        assert list(manifest) == ["report.json", "suites/crystal.json"]
        assert verify_manifest(tmp_path, manifest)

    def test_manifest_detects_changes(self, tmp_path):
        (tmp_path / "report.json").write_text("{}")
        manifest = generate_manifest(tmp_path)
        (tmp_path / "report.json").write_text('{"passed": false}')
        assert not verify_manifest(tmp_path, manifest)

    def test_manifest_skips_itself(self, tmp_path):
        (tmp_path / "a.csv").write_text("x\n")
        write_manifest(tmp_path)
        assert "manifest.json" not in generate_manifest(tmp_path)
