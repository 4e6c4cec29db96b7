"""Unit tests for configuration loading."""

from pathlib import Path

import pytest

from sampleclust.config import Config, load_config
from sampleclust.errors import ConfigurationError

DEFAULT_CONFIG = Path(__file__).resolve().parents[2] / "configs" / "default.yaml"


class TestConfig:
    """Tests for Config."""

    def test_defaults(self) -> None:
        """Test load_config without a path."""
        cfg = load_config()
        assert cfg.seed == 42
        assert cfg.selector.chunk_size == 65_536
        assert cfg.sampler.default_tau == 2.0

    def test_shipped_default_matches(self) -> None:
        """Test configs/default.yaml spells out the built-in defaults."""
        assert load_config(DEFAULT_CONFIG).to_dict() == Config().to_dict()

    def test_sections(self, tmp_path: Path) -> None:
        """Test nested sections override single fields."""
        path = tmp_path / "c.yaml"
        path.write_text("workers: 4\niteration:\n  max_iters: 7\nselector:\n  membership_cap: 10\n")
        cfg = load_config(path)
        assert cfg.workers == 4
        assert cfg.iteration.max_iters == 7
        assert cfg.iteration.tol == 1e-6
        assert cfg.selector.membership_cap == 10

    def test_unknown_key(self, tmp_path: Path) -> None:
        """Test unknown top-level keys raise."""
        path = tmp_path / "c.yaml"
        path.write_text("wrokers: 2\n")
        with pytest.raises(ConfigurationError):
            load_config(path)

    def test_unknown_section_field(self, tmp_path: Path) -> None:
        """Test unknown section fields raise."""
        path = tmp_path / "c.yaml"
        path.write_text("sampler:\n  max_size: 3\n")
        with pytest.raises(ConfigurationError):
            load_config(path)

    def test_invalid_iteration(self, tmp_path: Path) -> None:
        """Test section validation errors surface as configuration errors."""
        path = tmp_path / "c.yaml"
        path.write_text("iteration:\n  max_iters: 0\n")
        with pytest.raises(ConfigurationError):
            load_config(path)

    def test_yaml_round_trip(self, tmp_path: Path) -> None:
        """Test to_yaml and from_yaml agree."""
        cfg = Config(workers=3, output_dir=tmp_path / "out")
        cfg.to_yaml(tmp_path / "c.yaml")
        back = Config.from_yaml(tmp_path / "c.yaml")
        assert back.output_dir == tmp_path / "out"
        assert back.to_dict() == cfg.to_dict()
