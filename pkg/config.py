import os
import logging
from dotenv import load_dotenv

from errors import ConfigError

# Load environment variables
load_dotenv()

DEFAULT_LOG_LEVEL = "WARNING"


def sweep_threads() -> int:
    """
    Number of worker threads used to evaluate sweep grid points.

    Reads CASIMIR_THREADS on every call so a changed environment is honoured.

    Returns:
        int: Positive worker count (defaults to the number of cores)
    """
    raw = os.getenv("CASIMIR_THREADS")
    if raw is None or not raw.strip():
        return max(1, os.cpu_count() or 1)
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError(f"CASIMIR_THREADS must be a positive integer, got {raw!r}") from None
    if threads < 1:
        raise ConfigError(f"CASIMIR_THREADS must be a positive integer, got {raw!r}")
    return threads


def log_level() -> int:
    """Logging level named by CASIMIR_LOG_LEVEL, WARNING when unset or unknown."""
    name = (os.getenv("CASIMIR_LOG_LEVEL") or DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        return logging.getLevelName(DEFAULT_LOG_LEVEL)
    return level
