"""Unit tests for runtime settings."""

import pytest
from pydantic import ValidationError

from rankkit.config.settings import RankkitSettings, get_settings


def test_defaults() -> None:
    """
    GIVEN no overrides
    WHEN settings are built
    THEN the documented limits apply.
    """
    settings = get_settings()
    assert settings.exhaustive_max_sets == 24
    assert settings.oracle_max_dimension == 8
    assert settings.log_level == "WARNING"


def test_none_overrides_are_ignored() -> None:
    """
    GIVEN overrides where some flags were not given
    WHEN settings are built
    THEN only the given values replace defaults.
    """
    settings = get_settings(oracle_max_dimension=5, log_level=None)
    assert settings.oracle_max_dimension == 5
    assert settings.log_level == "WARNING"


def test_environment_is_not_read(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    GIVEN environment variables named like settings fields
    WHEN settings are built
    THEN the environment has no effect.
    """
    monkeypatch.setenv("ORACLE_MAX_DIMENSION", "3")
    monkeypatch.setenv("EXHAUSTIVE_MAX_SETS", "2")
    settings = RankkitSettings()
    assert settings.oracle_max_dimension == 8
    assert settings.exhaustive_max_sets == 24


def test_limits_are_validated() -> None:
    """
    GIVEN a nonpositive set limit
    WHEN settings are built
    THEN pydantic rejects it.
    """
    with pytest.raises(ValidationError):
        get_settings(exhaustive_max_sets=0)


def test_settings_are_frozen() -> None:
    """
    GIVEN built settings
    WHEN a field is assigned
    THEN the assignment is rejected.
    """
    settings = get_settings()
    with pytest.raises(ValidationError):
        settings.oracle_max_dimension = 4  # type: ignore[misc]
