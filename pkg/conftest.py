import os
import sys

import pytest

# flat module layout: make the root modules importable from tests/
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    monkeypatch.delenv("CASIMIR_THREADS", raising=False)
    monkeypatch.delenv("CASIMIR_LOG_LEVEL", raising=False)


@pytest.fixture
def registry():
    from species import builtin_registry
    return builtin_registry()
