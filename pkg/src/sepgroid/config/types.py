from typing import Literal, TypedDict

SettingsSection = Literal["budgets", "bounds", "selftest"]
SettingsKey = Literal[
    "max_steps",
    "max_weight",
    "max_z_weight",
    "max_depth",
    "max_exp",
    "max_len",
    "seed",
    "samples",
]
SettingDefault = int
SettingsEntry = tuple[SettingsSection, SettingsKey, SettingDefault]
ExpectedSettings = list[SettingsEntry]


class Settings(TypedDict):
    max_steps: int
    max_weight: int
    max_z_weight: int
    max_depth: int
    max_exp: int
    max_len: int
    seed: int
    samples: int
