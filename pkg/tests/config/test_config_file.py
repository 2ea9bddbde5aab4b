from configparser import ConfigParser
from pathlib import Path

import pytest

from sepgroid.config.config_file import ConfigFile
from sepgroid.config.constants import SETTINGS_FILE_NAME


class TestConfigFile:
    def test_config_file_default_path_initialization(self):
        config_file = ConfigFile()
        expected_path = str(Path.home().joinpath(SETTINGS_FILE_NAME))
        assert config_file.path == expected_path, "ConfigFile path does not match expected default path."

    def test_config_file_custom_path_initialization(self):
        custom_file_name = ".sepgroid_custom_settings"
        config_file = ConfigFile(file_name=custom_file_name)
        expected_path = str(Path.home().joinpath(custom_file_name))
        assert config_file.path == expected_path, "ConfigFile path does not match expected custom path."

    def test_load_method_success_with_mock(self, mocker):
        file_contents = "[budgets]\nmax_steps=500"
        mocked_open = mocker.mock_open(read_data=file_contents)
        mocker.patch("builtins.open", mocked_open)

        config_file = ConfigFile(file_name=".sepgroid_dummy_config")
        result = config_file.load()

        assert isinstance(result, ConfigParser), "Did not return a ConfigParser object."
        assert result.get("budgets", "max_steps") == "500", "ConfigParser object did not contain expected values."

    def test_load_method_file_not_found_with_mock(self, mocker):
        mocked_open = mocker.mock_open()
        mocked_open.side_effect = FileNotFoundError
        mocker.patch("builtins.open", mocked_open)
        file_name = ".sepgroid_nonexistent_config"

        config_file = ConfigFile(file_name=file_name)
        with pytest.raises(FileNotFoundError) as excinfo:
            config_file.load()

        assert file_name in str(excinfo.value), "Error message does not contain the non-existent file name."

    def test_write_settings(self, mocker):
        mocked_open = mocker.mock_open(read_data="")
        mocker.patch("builtins.open", mocked_open)
        expected_settings = [
            ("budgets", "max_steps", 100),
            ("budgets", "max_weight", 40),
            ("selftest", "seed", 0),
        ]

        config_file = ConfigFile(file_name=".sepgroid_dummy_config")
        config_file.write(expected_settings, {"max_steps": 500, "seed": 3})

        handle = mocked_open()
        handle.write.assert_has_calls(
            [
                mocker.call("[budgets]\n"),
                mocker.call("max_steps = 500\n"),
                mocker.call("max_weight = 40\n"),
                mocker.call("[selftest]\n"),
                mocker.call("seed = 3\n"),
            ],
            any_order=True,
        )
