import logging
import os

import pytest

import config
from errors import ConfigError


def test_threads_default_to_core_count():
    assert config.sweep_threads() == max(1, os.cpu_count() or 1)


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("CASIMIR_THREADS", "3")
    assert config.sweep_threads() == 3
    monkeypatch.setenv("CASIMIR_THREADS", " ")
    assert config.sweep_threads() == max(1, os.cpu_count() or 1)


@pytest.mark.parametrize("raw", ["0", "-2", "four", "1.5"])
def test_invalid_threads(monkeypatch, raw):
    monkeypatch.setenv("CASIMIR_THREADS", raw)
    with pytest.raises(ConfigError) as info:
        config.sweep_threads()
    assert info.value.exit_code == 2


def test_log_level(monkeypatch):
    assert config.log_level() == logging.WARNING
    monkeypatch.setenv("CASIMIR_LOG_LEVEL", "debug")
    assert config.log_level() == logging.DEBUG
    monkeypatch.setenv("CASIMIR_LOG_LEVEL", "chatty")
    assert config.log_level() == logging.WARNING
