"""Configuration management for regfact."""

from pathlib import Path
from typing import Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogSettings(BaseSettings):
    """Logging settings."""

    level: str = Field(default="WARNING", alias="REGFACT_LOG_LEVEL")
    format: str = Field(default="console", alias="REGFACT_LOG_FORMAT")

    model_config = SettingsConfigDict(env_prefix="", populate_by_name=True)


class LimitSettings(BaseSettings):
    """Instance size limits applied by the command-line interface."""

    max_order: int = Field(
        default=1024,
        ge=4,
        alias="REGFACT_MAX_ORDER",
        description="Largest group order any command will build",
    )

    model_config = SettingsConfigDict(env_prefix="", populate_by_name=True)


class SearchSettings(BaseSettings):
    """Defaults for the exhaustive starter search."""

    max_group_order: int = Field(default=16, ge=1, le=16, alias="REGFACT_SEARCH_MAX_ORDER")
    max_nodes: int = Field(default=1_000_000, ge=0, alias="REGFACT_SEARCH_MAX_NODES")

    model_config = SettingsConfigDict(env_prefix="", populate_by_name=True)


class Settings(BaseSettings):
    """Main application settings."""

    log: LogSettings = Field(default_factory=LogSettings)
    limits: LimitSettings = Field(default_factory=LimitSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    @classmethod
    def from_yaml(cls, path: Path) -> "Settings":
        """Load settings from YAML file.

        Args:
            path: Path to YAML configuration file

        Returns:
            Settings instance
        """
        with open(path, encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}

        # regfact.yaml nests everything under a top-level "regfact" key
        if "regfact" in config:
            config = config["regfact"] or {}
        config.pop("version", None)

        return cls(**config)


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get global settings instance.

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def set_settings(settings: Optional[Settings]) -> None:
    """Set global settings instance.

    Args:
        settings: Settings to use, or None to re-read the environment on next access
    """
    global _settings
    _settings = settings
