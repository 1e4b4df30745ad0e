"""Settings for milnor_hodge package."""

from functools import lru_cache

from pydantic import Field, SecretStr
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings for milnor_hodge package."""

    SENTRY_DSN: SecretStr = SecretStr("")
    LOG_LEVEL: str = "WARNING"

    RANDOM_COEFFICIENT_BOUND: int = Field(default=2, ge=1)
    RANDOM_MAX_ATTEMPTS: int = Field(default=5000, ge=1)
    CHECK_WORKERS: int = Field(default=1, ge=1)

    model_config = SettingsConfigDict(
        env_prefix="MILNOR_HODGE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Returns settings object."""
    return Settings()
