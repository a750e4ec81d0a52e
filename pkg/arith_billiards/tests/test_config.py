import logging

import pytest

from app.config import DEFAULT_MAX_STATES, load_settings, resolve_budget, settings


def test_max_states_from_environment(monkeypatch):
    monkeypatch.setenv("BILLIARDS_MAX_STATES", "1234")
    assert load_settings().max_states == 1234


@pytest.mark.parametrize("raw", ["ten", "1e6", "", "0", "-5"])
def test_malformed_max_states_falls_back(monkeypatch, caplog, raw):
    monkeypatch.setenv("BILLIARDS_MAX_STATES", raw)
    with caplog.at_level(logging.WARNING, logger="arith_billiards"):
        loaded = load_settings()
    assert loaded.max_states == DEFAULT_MAX_STATES
    assert any("BILLIARDS_MAX_STATES" in record.getMessage() for record in caplog.records)


def test_log_flags(monkeypatch):
    monkeypatch.setenv("BILLIARDS_LOG_TO_FILE", "off")
    monkeypatch.setenv("BILLIARDS_LOG_LEVEL", "debug")
    loaded = load_settings()
    assert loaded.log_to_file is False
    assert loaded.log_level == "DEBUG"


def test_resolve_budget():
    assert resolve_budget(None) == settings.max_states
    assert resolve_budget(7) == 7
