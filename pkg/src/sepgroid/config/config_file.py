from __future__ import annotations

from configparser import ConfigParser
from pathlib import Path
from typing import TYPE_CHECKING

from sepgroid.config.constants import SETTINGS_FILE_NAME

if TYPE_CHECKING:
    from sepgroid.config.types import ExpectedSettings, Settings


class ConfigFile:
    def __init__(self, file_name: str = SETTINGS_FILE_NAME) -> None:
        self.path = str(Path.home() / file_name)

    def load(self) -> ConfigParser:
        config_parser = ConfigParser()

        if self.path not in config_parser.read(self.path, encoding="utf-8"):
            msg = f"No config file found at: {self.path}"
            raise FileNotFoundError(msg)

        return config_parser

    def write(self, expected_settings: ExpectedSettings, settings: Settings) -> None:
        config_parser = ConfigParser()

        for section, key, default in expected_settings:
            if not config_parser.has_section(section):
                config_parser.add_section(section)
            config_parser.set(section, key, str(settings.get(key, default)))

        with open(self.path, "w", encoding="utf-8") as config_file:
            config_parser.write(config_file)
