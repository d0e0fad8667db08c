# config/settings.py
import logging
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings

logger = logging.getLogger("flagcav.settings")


class Settings(BaseSettings):
    # Sweep bounds (verify); every other bound is derived from this one
    FLAGCAV_MAX_RANK: int = Field(7, ge=1)
    # Worker processes for sweeps; unset means all available cores
    FLAGCAV_PARALLEL: Optional[int] = Field(None, ge=1)

    # Period-domain sweep: random Hodge draws on top of the exhaustive grid
    PERIOD_RANDOM_DRAWS: int = Field(200, ge=0)
    RANDOM_SEED: int = Field(20240611)

    # Runtime
    LOG_LEVEL: str = Field("warning")

    # Pydantic v2 model config
    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        # allow extra env vars (development convenience)
        "extra": "allow",
        # make env lookup case-insensitive
        "case_sensitive": False,
    }


def load_settings() -> Settings:
    """Fresh settings from the current environment and .env."""
    loaded = Settings()
    logger.debug("settings loaded: %r", loaded)
    return loaded


# instantiate global settings
settings = load_settings()
