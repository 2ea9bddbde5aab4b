"""Example graphs shipped with the package."""

from __future__ import annotations

from pathlib import Path

import sepgroid

FIXTURE_SUFFIX = ".sg"


def fixtures_dir() -> Path:
    return Path(sepgroid.__file__).parent / "data" / "fixtures"


def load_fixture(name: str) -> str:
    """The text of fixture ``name``; the ``.sg`` suffix may be left off.

    Names reaching outside the fixtures directory are refused.
    """
    base = fixtures_dir()
    file_name = name if name.endswith(FIXTURE_SUFFIX) else f"{name}{FIXTURE_SUFFIX}"
    path = base / file_name
    if not path.is_file() or path.resolve().parent != base.resolve():
        msg = f"No fixture named {name!r}"
        raise FileNotFoundError(msg)
    return path.read_text(encoding="utf-8")


def list_fixtures() -> list[str]:
    """Fixture names without their suffix, sorted."""
    return sorted(path.stem for path in fixtures_dir().glob(f"*{FIXTURE_SUFFIX}") if path.is_file())
