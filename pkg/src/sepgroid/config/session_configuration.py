from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Mapping

from sepgroid.budgets import Bounds, Budget
from sepgroid.config.constants import EXPECTED_SETTINGS

if TYPE_CHECKING:
    from sepgroid.config.config_file import ConfigFile
    from sepgroid.config.types import Settings

logger = logging.getLogger(__name__)


def _defaults() -> Settings:
    return {key: default for _, key, default in EXPECTED_SETTINGS}  # type: ignore[return-value]


class SessionConfiguration:
    """Budgets, bounds and self-test settings, read from the user's settings file."""

    def __init__(self, config_file: ConfigFile) -> None:
        self._config_file = config_file
        self._settings: Settings = _defaults()

    @property
    def settings(self) -> Settings:
        return self._settings

    def _check_integer(self, key: str, raw: str) -> int:
        try:
            value = int(raw)
        except ValueError:
            msg = f"Setting {key} must be an integer, got {raw!r}"
            raise ValueError(msg) from None
        if value < 0:
            msg = f"Setting {key} must not be negative, got {value}"
            raise ValueError(msg)
        return value

    def _check_positive_budgets(self) -> None:
        for key in ("max_steps", "max_weight", "max_exp", "max_len"):
            if self._settings[key] == 0:  # type: ignore[literal-required]
                msg = f"Setting {key} must be positive"
                raise ValueError(msg)

    def load_settings(self) -> Settings:
        settings = _defaults()
        try:
            config_parser = self._config_file.load()
        except FileNotFoundError as error:
            logger.debug("%s; using defaults", error)
        else:
            for section, key, default in EXPECTED_SETTINGS:
                raw = config_parser.get(section, key, fallback=str(default))
                settings[key] = self._check_integer(key, raw)
        self._settings = settings
        self._check_positive_budgets()
        return settings

    def override(self, overrides: Mapping[str, int | None]) -> Settings:
        """Apply one-run values; ``None`` leaves a setting alone."""
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in self._settings:
                msg = f"Unknown setting {key}"
                raise KeyError(msg)
            self._settings[key] = self._check_integer(key, str(value))  # type: ignore[literal-required]
        self._check_positive_budgets()
        return self._settings

    def save(self) -> None:
        self._config_file.write(EXPECTED_SETTINGS, self._settings)

    def budget(self) -> Budget:
        return Budget(self._settings["max_steps"], self._settings["max_weight"], self._settings["max_z_weight"])

    def bounds(self) -> Bounds:
        return Bounds(self._settings["max_depth"], self._settings["max_exp"], self._settings["max_len"])
