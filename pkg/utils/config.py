"""
Runtime settings for the Coxeter kernel.
Values come from the environment, after merging a local .env file.
"""
import os
import logging
from dataclasses import dataclass
from typing import Callable, TypeVar

import dotenv

# Load environment variables from .env file
dotenv.load_dotenv()

logger = logging.getLogger(__name__)

T = TypeVar("T")


class ConfigError(ValueError):
    """Raised when an environment variable holds an unusable value"""
    pass


@dataclass(frozen=True)
class Settings:
    """Tunable constants shared by the engine, the sweeps and the frontends"""
    epsilon: float = 1e-7
    length_cap: int = 40
    normalize_cap: int = 60
    seed: int = 0
    exhaustive_limit: int = 200
    sample_size: int = 500
    cache_size: int = 50000
    log_level: str = "WARNING"


def _read(name: str, default: T, convert: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return convert(raw.strip())
    except ValueError as e:
        raise ConfigError(f"{name}={raw!r} is not valid: {e}")


def _positive(convert: Callable[[str], T]) -> Callable[[str], T]:
    def check(raw: str) -> T:
        value = convert(raw)
        if value <= 0:
            raise ValueError("must be positive")
        return value
    return check


def load_settings() -> Settings:
    """
    Build a Settings object from COXETER_* environment variables.

    Returns:
        Settings: defaults overridden by whatever the environment provides

    Raises:
        ConfigError: if a variable cannot be parsed
    """
    settings = Settings(
        epsilon=_read("COXETER_EPSILON", Settings.epsilon, _positive(float)),
        length_cap=_read("COXETER_LENGTH_CAP", Settings.length_cap, _positive(int)),
        normalize_cap=_read("COXETER_NORMALIZE_CAP", Settings.normalize_cap, _positive(int)),
        seed=_read("COXETER_SEED", Settings.seed, int),
        exhaustive_limit=_read("COXETER_EXHAUSTIVE_LIMIT", Settings.exhaustive_limit, _positive(int)),
        sample_size=_read("COXETER_SAMPLE_SIZE", Settings.sample_size, _positive(int)),
        cache_size=_read("COXETER_CACHE_SIZE", Settings.cache_size, _positive(int)),
        log_level=_read("COXETER_LOG_LEVEL", Settings.log_level, str.upper),
    )
    logger.debug(f"Loaded settings: {settings}")
    return settings


settings = load_settings()
