"""CLI settings configuration."""

from typing import Literal, get_args

from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["debug", "info", "warning", "error"]
LOG_LEVELS: tuple[str, ...] = get_args(LogLevel)


class AppSettings(BaseSettings):
    """Settings for the cspalgebra command line."""

    model_config = SettingsConfigDict(
        env_prefix="APP_",
        env_file=".env",
        extra="ignore",
    )

    log_level: LogLevel = "warning"
    json_indent: int = 2
    jobs: int = 1  # templates classified in parallel


settings = AppSettings()
