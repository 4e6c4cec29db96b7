"""Exception hierarchy for sampleclust."""

from __future__ import annotations

from pathlib import Path


class SampleclustError(Exception):
    """Base class for all sampleclust errors."""


class InputError(SampleclustError, ValueError):
    """Invalid arguments or inputs (CLI exit code 1)."""


class ConfigurationError(InputError):
    """Invalid configuration, plan or budget."""


class PointFileError(InputError):
    """A point file could not be parsed."""

    def __init__(self, message: str, path: Path | str | None = None, line: int | None = None) -> None:
        location = ""
        if path is not None:
            location = f"{path}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.path = Path(path) if path is not None else None
        self.line = line


class DataGenerationError(SampleclustError):
    """Rejection sampling could not place the requested points."""
