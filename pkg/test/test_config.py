"""Test the session configuration."""

import pytest

from koszulx.classes.field import GF
from koszulx.config import SessionConfig, default_characteristic


class TestDefaultCharacteristic:
    """Test the default_characteristic function."""

    def test_fallback(self, monkeypatch):
        """Test the built-in default."""
        monkeypatch.delenv("KV_DEFAULT_P", raising=False)
        assert default_characteristic() == 32003
        monkeypatch.setenv("KV_DEFAULT_P", " ")
        assert default_characteristic() == 32003

    def test_environment(self, monkeypatch):
        """Test the environment override."""
        monkeypatch.setenv("KV_DEFAULT_P", "7")
        assert default_characteristic() == 7
        assert SessionConfig().p == 7

    @pytest.mark.parametrize("value", ["12", "abc"])
    def test_invalid_environment(self, monkeypatch, value):
        """Test that a composite or non-numeric override raises."""
        monkeypatch.setenv("KV_DEFAULT_P", value)
        with pytest.raises(ValueError):
            default_characteristic()


class TestSessionConfig:
    """Test the SessionConfig class."""

    def test_defaults(self, monkeypatch):
        """Test the default settings."""
        monkeypatch.delenv("KV_DEFAULT_P", raising=False)
        config = SessionConfig()
        assert (config.p, config.seed, config.degree_cap, config.output, config.workers) == (
            32003,
            0,
            120,
            "text",
            1,
        )
        assert config.field is GF(32003)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"p": 32004},
            {"degree_cap": 11},
            {"seed": -1},
            {"seed": 2**64},
            {"output": "xml"},
            {"workers": 0},
        ],
    )
    def test_invalid(self, kwargs):
        """Test rejected settings."""
        with pytest.raises(ValueError):
            SessionConfig(**kwargs)

    def test_frozen(self):
        """Test that settings cannot change after creation."""
        config = SessionConfig(p=101)
        with pytest.raises(AttributeError):
            config.p = 103
