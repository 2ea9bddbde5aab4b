from sepgroid.budgets import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_EXP,
    DEFAULT_MAX_LEN,
    DEFAULT_MAX_STEPS,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_MAX_Z_WEIGHT,
)
from sepgroid.config.types import ExpectedSettings, SettingsKey, SettingsSection

SETTINGS_FILE_NAME = ".sepgroid"
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1_000

# Sections
BUDGETS: SettingsSection = "budgets"
BOUNDS: SettingsSection = "bounds"
SELFTEST: SettingsSection = "selftest"

# Keys
MAX_STEPS: SettingsKey = "max_steps"
MAX_WEIGHT: SettingsKey = "max_weight"
MAX_Z_WEIGHT: SettingsKey = "max_z_weight"
MAX_DEPTH: SettingsKey = "max_depth"
MAX_EXP: SettingsKey = "max_exp"
MAX_LEN: SettingsKey = "max_len"
SEED: SettingsKey = "seed"
SAMPLES: SettingsKey = "samples"

EXPECTED_SETTINGS: ExpectedSettings = [
    (BUDGETS, MAX_STEPS, DEFAULT_MAX_STEPS),
    (BUDGETS, MAX_WEIGHT, DEFAULT_MAX_WEIGHT),
    (BUDGETS, MAX_Z_WEIGHT, DEFAULT_MAX_Z_WEIGHT),
    (BOUNDS, MAX_DEPTH, DEFAULT_MAX_DEPTH),
    (BOUNDS, MAX_EXP, DEFAULT_MAX_EXP),
    (BOUNDS, MAX_LEN, DEFAULT_MAX_LEN),
    (SELFTEST, SEED, DEFAULT_SEED),
    (SELFTEST, SAMPLES, DEFAULT_SAMPLES),
]
