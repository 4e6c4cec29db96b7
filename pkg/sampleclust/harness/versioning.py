"""schema_version of run reports.

A reader accepts reports of its own major version whose minor version is not newer
than its own; ``sclust compare`` refuses anything else.
"""

from __future__ import annotations

import re

from sampleclust.errors import ConfigurationError

CURRENT_SCHEMA_VERSION = "1.0.0"

_SEMVER = re.compile(r"^(\d+)\.(\d+)\.(\d+)$")


def parse_version(version: str) -> tuple[int, int, int]:
    match = _SEMVER.match(str(version))
    if match is None:
        raise ValueError(f"Invalid version format: {version}")
    major, minor, patch = (int(part) for part in match.groups())
    return major, minor, patch


def can_read(report_version: str, reader_version: str = CURRENT_SCHEMA_VERSION) -> tuple[bool, str]:
    """Whether ``reader_version`` understands ``report_version``, with the reason."""
    try:
        report, reader = parse_version(report_version), parse_version(reader_version)
    except ValueError as e:
        return False, str(e)
    if report[0] != reader[0]:
        return False, f"Major version mismatch: report={report_version}, reader={reader_version}"
    if report[1] > reader[1]:
        return False, f"Report has newer fields: report={report_version}, reader={reader_version}"
    return True, "Compatible"


def check_compatibility(report_version: str) -> None:
    """Raise ConfigurationError for a report this version cannot read."""
    ok, reason = can_read(report_version)
    if not ok:
        raise ConfigurationError(f"Incompatible report schema version: {reason}")
