"""Package logger, the ROTCOCYCLE_DEBUG switch and CLI verbosity."""

import logging

import pytest

from rotcocycle.logging_config import (
    ROTCOCYCLE_DEBUG_ENV_VAR,
    configure_logging,
    get_logger,
    is_debug_enabled,
    verbosity_level,
)


@pytest.fixture(autouse=True)
def _reset_debug_cache():
    is_debug_enabled.cache_clear()
    yield
    is_debug_enabled.cache_clear()
    configure_logging()


@pytest.mark.parametrize("value", ["1", "true", "YES", " yes "])
def test_debug_enabled_values(monkeypatch, value):
    monkeypatch.setenv(ROTCOCYCLE_DEBUG_ENV_VAR, value)
    assert is_debug_enabled()


@pytest.mark.parametrize("value", ["", "0", "off"])
def test_debug_disabled_values(monkeypatch, value):
    monkeypatch.setenv(ROTCOCYCLE_DEBUG_ENV_VAR, value)
    assert not is_debug_enabled()


def test_module_loggers_share_the_package_handler(monkeypatch):
    monkeypatch.delenv(ROTCOCYCLE_DEBUG_ENV_VAR, raising=False)
    logger = get_logger("rotcocycle.circlelift")
    package = logging.getLogger("rotcocycle")
    assert logger.parent is package
    assert logger.handlers == []
    assert len(package.handlers) == 1
    get_logger("rotcocycle.words")
    assert len(package.handlers) == 1


def test_foreign_names_are_nested():
    assert get_logger("scratch").name == "rotcocycle.scratch"


def test_configure_logging_sets_the_effective_level(monkeypatch):
    monkeypatch.delenv(ROTCOCYCLE_DEBUG_ENV_VAR, raising=False)
    logger = get_logger("rotcocycle.cocycle")
    configure_logging(logging.INFO)
    assert logger.getEffectiveLevel() == logging.INFO
    configure_logging()
    assert logger.getEffectiveLevel() == logging.WARNING


@pytest.mark.parametrize(("count", "level"), [(0, logging.WARNING), (1, logging.INFO), (2, logging.DEBUG), (5, logging.DEBUG)])
def test_verbosity_levels(monkeypatch, count, level):
    monkeypatch.delenv(ROTCOCYCLE_DEBUG_ENV_VAR, raising=False)
    assert verbosity_level(count) == level


def test_environment_switch_overrides_quiet_cli(monkeypatch):
    monkeypatch.setenv(ROTCOCYCLE_DEBUG_ENV_VAR, "1")
    assert verbosity_level(0) == logging.DEBUG
