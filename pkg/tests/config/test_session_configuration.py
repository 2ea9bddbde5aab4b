from configparser import ConfigParser
from unittest.mock import create_autospec

import pytest

from sepgroid.budgets import Bounds, Budget
from sepgroid.config.config_file import ConfigFile
from sepgroid.config.constants import DEFAULT_SAMPLES, EXPECTED_SETTINGS
from sepgroid.config.session_configuration import SessionConfiguration


def parser_with(text):
    config_parser = ConfigParser()
    config_parser.read_string(text)
    return config_parser


class TestSessionConfiguration:
    @pytest.fixture
    def config_file_mock(self):
        return create_autospec(ConfigFile)

    @pytest.fixture
    def session_configuration(self, config_file_mock):
        return SessionConfiguration(config_file=config_file_mock)

    def test_init_method(self, session_configuration, config_file_mock):
        assert session_configuration._config_file is config_file_mock  # noqa: SLF001
        assert session_configuration.budget() == Budget()
        assert session_configuration.bounds() == Bounds()
        assert session_configuration.settings["samples"] == DEFAULT_SAMPLES

    def test_load_settings(self, config_file_mock, session_configuration):
        config_file_mock.load.return_value = parser_with("[budgets]\nmax_weight = 12\n[bounds]\nmax_len = 3\n")

        settings = session_configuration.load_settings()

        config_file_mock.load.assert_called_once()
        assert settings["max_weight"] == 12, "The setting was not loaded correctly."
        assert session_configuration.budget() == Budget(max_weight=12)
        assert session_configuration.bounds() == Bounds(max_len=3)

    def test_load_settings_with_defaults(self, config_file_mock, session_configuration):
        config_file_mock.load.return_value = ConfigParser()

        settings = session_configuration.load_settings()

        assert settings == {key: default for _, key, default in EXPECTED_SETTINGS}

    def test_missing_file_falls_back_to_defaults(self, config_file_mock, session_configuration):
        config_file_mock.load.side_effect = FileNotFoundError("No config file found at: ~/.sepgroid")

        session_configuration.load_settings()

        assert session_configuration.budget() == Budget()

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("[budgets]\nmax_steps = many\n", "must be an integer"),
            ("[bounds]\nmax_exp = -1\n", "must not be negative"),
            ("[budgets]\nmax_weight = 0\n", "must be positive"),
        ],
    )
    def test_load_settings_rejects_bad_values(self, config_file_mock, session_configuration, text, message):
        config_file_mock.load.return_value = parser_with(text)

        with pytest.raises(ValueError, match=message):
            session_configuration.load_settings()

    def test_override(self, session_configuration):
        settings = session_configuration.override({"max_steps": 10, "seed": None, "samples": 5})

        assert settings["max_steps"] == 10
        assert settings["samples"] == 5
        assert settings["seed"] == 0

    def test_override_unknown_key(self, session_configuration):
        with pytest.raises(KeyError, match="Unknown setting"):
            session_configuration.override({"colour": 1})

    def test_override_keeps_budgets_positive(self, session_configuration):
        with pytest.raises(ValueError, match="max_len must be positive"):
            session_configuration.override({"max_len": 0})

    def test_save(self, config_file_mock, session_configuration):
        session_configuration.override({"max_exp": 2})

        session_configuration.save()

        config_file_mock.write.assert_called_once_with(EXPECTED_SETTINGS, session_configuration.settings)
