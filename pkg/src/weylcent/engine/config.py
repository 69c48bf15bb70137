"""Configuration management for weylcent.

Supports the config_dir pattern: defaults live in config/settings.yaml and
can be overridden by environment variables.
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

logger = logging.getLogger(__name__)


@dataclass
class WeylSettings:
    """Settings loaded from config/settings.yaml."""

    # Centralizer slices: default D = factor * p
    default_degree_factor: int = 2

    # Certificates
    max_primes: int = 64
    cross_check: bool = True
    workers: int = 1

    # lemma-check
    lemma_samples: int = 50
    lemma_seed: int = 0
    lemma_max_degree: int = 3
    lemma_degree_bound: int = 6

    log_level: str = "WARNING"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "WeylSettings":
        """Create from dictionary."""
        return cls(
            default_degree_factor=data.get("default_degree_factor", 2),
            max_primes=data.get("max_primes", 64),
            cross_check=data.get("cross_check", True),
            workers=data.get("workers", 1),
            lemma_samples=data.get("lemma_samples", 50),
            lemma_seed=data.get("lemma_seed", 0),
            lemma_max_degree=data.get("lemma_max_degree", 3),
            lemma_degree_bound=data.get("lemma_degree_bound", 6),
            log_level=data.get("log_level", "WARNING"),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "default_degree_factor": self.default_degree_factor,
            "max_primes": self.max_primes,
            "cross_check": self.cross_check,
            "workers": self.workers,
            "lemma_samples": self.lemma_samples,
            "lemma_seed": self.lemma_seed,
            "lemma_max_degree": self.lemma_max_degree,
            "lemma_degree_bound": self.lemma_degree_bound,
            "log_level": self.log_level,
        }


class ConfigLoader:
    """Loads configuration from config_dir.

    Expected structure:
        config_dir/
            settings.yaml
    """

    def __init__(self, config_dir: str | Path | None = None):
        self.config_dir = Path(config_dir) if config_dir else self._default_config_dir()
        self._settings: WeylSettings | None = None

    def _default_config_dir(self) -> Path:
        """Get default config directory."""
        env_dir = os.environ.get("WEYLCENT_CONFIG_DIR")
        if env_dir:
            return Path(env_dir)
        return Path("./config")

    def _validate_path(self, path: Path) -> None:
        """Validate path is within config_dir (traversal protection)."""
        try:
            resolved = path.resolve()
            config_resolved = self.config_dir.resolve()
        except Exception as e:
            raise ValueError(f"Invalid path: {path}") from e

        if not resolved.is_relative_to(config_resolved):
            raise ValueError(f"Path traversal detected: {path}")

    def load_settings(self) -> WeylSettings:
        """Load settings from config/settings.yaml."""
        if self._settings:
            return self._settings

        settings_path = self.config_dir / "settings.yaml"
        data: dict[str, Any] = {}

        if settings_path.exists():
            self._validate_path(settings_path)
            with open(settings_path) as f:
                data = yaml.safe_load(f) or {}
            logger.info(f"Loaded settings from {settings_path}")
        else:
            logger.info(f"No settings.yaml found at {settings_path}, using defaults")

        # Override with environment variables
        if os.environ.get("WEYLCENT_MAX_PRIMES"):
            data["max_primes"] = int(os.environ["WEYLCENT_MAX_PRIMES"])
        if os.environ.get("WEYLCENT_WORKERS"):
            data["workers"] = int(os.environ["WEYLCENT_WORKERS"])
        if os.environ.get("WEYLCENT_NO_CROSS_CHECK", "").lower() == "true":
            data["cross_check"] = False

        self._settings = WeylSettings.from_dict(data)
        return self._settings

    def reload(self) -> None:
        """Reload all configuration."""
        self._settings = None
        self.load_settings()

    def get_config_schema(self) -> dict[str, Any]:
        """Get JSON schema for settings.yaml (a flat mapping)."""
        return {
            "$schema": "http://json-schema.org/draft-07/schema#",
            "title": "weylcent Configuration",
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "default_degree_factor": {"type": "integer", "minimum": 0, "default": 2},
                "max_primes": {"type": "integer", "minimum": 1, "default": 64},
                "cross_check": {"type": "boolean", "default": True},
                "workers": {"type": "integer", "minimum": 1, "default": 1},
                "lemma_samples": {"type": "integer", "minimum": 0, "default": 50},
                "lemma_seed": {"type": "integer", "default": 0},
                "lemma_max_degree": {"type": "integer", "minimum": 1, "default": 3},
                "lemma_degree_bound": {"type": "integer", "minimum": 0, "default": 6},
                "log_level": {
                    "type": "string",
                    "enum": ["DEBUG", "INFO", "WARNING", "ERROR"],
                    "default": "WARNING",
                },
            },
        }
