"""
Unit tests for the run configuration

Tests the key = value file format, --set overrides, per-command
requirements, and path resolution for measure and suite files.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from fraccauchy.core import ConfigError, load_run_config, parse_config_text, parse_overrides


@pytest.fixture
def measure_file(tmp_path):
    path = tmp_path / "two.measure"
    path.write_text("atom 0.3 0.5\natom 0.7 0.5\n")
    return path


def write_config(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestParsing:
    """Raw text parsing."""

    def test_comments_and_blanks(self):
        values = parse_config_text("# heat run\n\nbeta = 1\ntimes = 0.1, 0.3\n")
        assert values == {"beta": "1", "times": "0.1, 0.3"}

    def test_malformed_line(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config_text("beta 0.5", "run.cfg")
        assert "run.cfg:1" in str(excinfo.value)

    def test_duplicate_key(self):
        with pytest.raises(ConfigError):
            parse_config_text("beta = 0.5\nbeta = 0.6\n")

    def test_overrides(self):
        assert parse_overrides(["beta=0.5", " times = 0.1 0.2 "]) == {"beta": "0.5", "times": "0.1 0.2"}
        with pytest.raises(ConfigError):
            parse_overrides(["beta"])
        with pytest.raises(ConfigError):
            parse_overrides(["=0.5"])


class TestRunConfig:
    """Validated configurations."""

    def test_lists_and_points(self):
        cfg = load_run_config("solve", overrides={
            "lengths": "1, 2", "beta": "0.5", "times": "0.1 0.3", "points": "0.5, 1.0 ; 0.25, 0.5",
        })
        assert cfg.dim == 2
        assert cfg.times == [0.1, 0.3]
        np.testing.assert_array_equal(cfg.point_array(), [[0.5, 1.0], [0.25, 0.5]])

    def test_default_grid_includes_boundary(self):
        cfg = load_run_config("solve", overrides={"beta": "1", "times": "0.1", "lengths": "1, 2", "grid": "3"})
        pts = cfg.point_array()
        assert pts.shape == (9, 2)
        np.testing.assert_array_equal(pts[:3], [[0.0, 0.0], [0.0, 1.0], [0.0, 2.0]])

    def test_mode_cap(self):
        cfg = load_run_config("solve", overrides={"beta": "1", "times": "0.1", "lengths": "1 1", "modes": "24"})
        assert cfg.mode_cap() == (24, 24)

    def test_file_then_overrides(self, tmp_path):
        path = write_config(tmp_path, "beta = 0.5\ntimes = 0.1\nseed = 3\n")
        cfg = load_run_config("solve", path, {"seed": 9, "out": None})
        assert cfg.seed == 9
        assert cfg.out is None
        assert cfg.beta == 0.5

    def test_relative_measure_path(self, tmp_path, measure_file):
        path = write_config(tmp_path, f"measure = {measure_file.name}\ntimes = 0.2\n")
        cfg = load_run_config("solve", path)
        assert cfg.measure == measure_file

    @pytest.mark.parametrize(
        "command,overrides",
        [
            ("solve", {"beta": "0.5", "times": ""}),
            ("solve", {"times": "0.1"}),
            ("solve", {"beta": "0.5", "times": "0.1, -0.2"}),
            ("solve", {"beta": "1.5", "times": "0.1"}),
            ("solve", {"beta": "0.5", "times": "0.1", "lengths": "1, 0"}),
            ("solve", {"beta": "0.5", "times": "0.1", "lengths": "1 1", "points": "0.5"}),
            ("ml", {"beta": "0.5", "x": "0, 1"}),
            ("ml", {"beta": "0.5"}),
            ("eigen", {"beta": "0.5", "times": "1"}),
            ("sample", {"sampler": "composite"}),
            ("sample", {"sampler": "wiener", "beta": "0.5"}),
            ("mc", {"beta": "0.5", "times": "0.1", "n_paths": "10"}),
            ("validate", {"colour": "blue"}),
        ],
    )
    def test_invalid(self, command, overrides):
        with pytest.raises(ConfigError):
            load_run_config(command, overrides=overrides)

    def test_beta_and_measure_exclusive(self, measure_file):
        with pytest.raises(ConfigError):
            load_run_config("solve", overrides={"beta": "0.5", "measure": str(measure_file), "times": "0.1"})

    def test_missing_measure_file(self, tmp_path):
        with pytest.raises(ConfigError) as excinfo:
            load_run_config("solve", overrides={"measure": str(tmp_path / "absent.measure"), "times": "0.1"})
        assert "not found" in str(excinfo.value)

    def test_missing_config_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_run_config("solve", tmp_path / "absent.cfg")

    def test_frozen(self):
        cfg = load_run_config("validate")
        with pytest.raises(ValidationError):
            cfg.seed = 4
