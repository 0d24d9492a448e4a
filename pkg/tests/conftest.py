"""Shared quiver fixtures."""

import pytest

from quivercanon.quiver import Quiver, build_quiver


@pytest.fixture
def sl2() -> Quiver:
    return build_quiver({"vertices": ["1"], "edges": []})


@pytest.fixture
def a2() -> Quiver:
    return build_quiver({"vertices": ["1", "2"], "edges": [["1", "2"]]})


@pytest.fixture
def a3() -> Quiver:
    return build_quiver({"vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]})


@pytest.fixture
def a1xa1() -> Quiver:
    return build_quiver({"vertices": ["1", "2"], "edges": []})


@pytest.fixture
def kronecker() -> Quiver:
    return build_quiver({"vertices": ["1", "2"], "edges": [["1", "2"], ["1", "2"]]})


@pytest.fixture
def a2_file(tmp_path):
    """A2 quiver file with the framing of rho."""
    path = tmp_path / "a2.yaml"
    path.write_text("vertices: [1, 2]\nedges:\n  - [1, 2]\nframing1: {1: 1, 2: 1}\n")
    return path


@pytest.fixture
def sl2_file(tmp_path):
    path = tmp_path / "sl2.json"
    path.write_text('{"vertices": ["1"], "edges": []}')
    return path
