"""Shared paths and environment overrides for ringlab user configuration."""

import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

BUILDER_CAP_ENV = "RINGLAB_BUILDER_CAP"
ENUM_CAP_ENV = "RINGLAB_ENUM_CAP"
SHARDS_ENV = "RINGLAB_SHARDS"


def get_config_dir() -> Path:
    """Return the user config directory for ringlab."""
    try:
        import platformdirs

        return Path(platformdirs.user_config_dir("ringlab"))
    except ImportError:
        return Path.home() / ".config" / "ringlab"


def get_env_file_path() -> Path:
    """Return the path to the ringlab .env file."""
    return get_config_dir() / ".env"


def load_ringlab_env() -> Path | None:
    """Load cap overrides from the user config .env file if it exists.

    Variables already present in the process environment win over the file.
    """
    from dotenv import load_dotenv

    env_file = get_env_file_path()
    if env_file.exists():
        load_dotenv(env_file, override=False)
        return env_file
    return None


def get_int_setting(name: str, default: int, *, load_env: bool = True) -> int:
    """Return a positive integer from the environment, or ``default``.

    Malformed or non-positive values are ignored with a warning.
    """
    if load_env:
        load_ringlab_env()
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", name, raw)
        return default
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive", name, raw)
        return default
    return value
