"""Locating and parsing the plain-text data files shipped with the package."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

ENV_VAR = "KSFORGE_FIXTURES"


def fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("ksforge") / "data"))


def read_rows(name: str) -> list[list[int]]:
    """Integer rows of a whitespace table, skipping blanks and ``#`` comments."""
    rows = []
    text = (fixture_dir() / name).read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.split()])
    return rows
