"""Point files (CSV, NPZ) and their YAML metadata sidecars."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Any, Literal

import numpy as np
import yaml

from sampleclust.core.types import OUTLIER, OUTLIER_LABEL, Dataset, encode_labels
from sampleclust.errors import PointFileError

PointFormat = Literal["csv", "npz"]

LABEL_COLUMN = "label"
META_SUFFIX = ".meta.yaml"


def _resolve_format(path: Path, fmt: str | None) -> PointFormat:
    fmt = (fmt or path.suffix.lstrip(".") or "csv").lower()
    if fmt not in ("csv", "npz"):
        raise PointFileError(f"Unsupported point file format '{fmt}'", path)
    return fmt  # type: ignore[return-value]


def _is_number(field: str) -> bool:
    try:
        float(field)
    except ValueError:
        return False
    return True


def _is_header(row: list[str]) -> bool:
    # a non-numeric last field alone may be a label of a data row
    if row[-1].strip().lower() == LABEL_COLUMN:
        return True
    coords = row[:-1] if len(row) > 1 else row
    return not all(_is_number(s) for s in coords)


def load_points(
    path: Path | str,
    fmt: str | None = None,
    labels: bool | None = None,
    name: str | None = None,
) -> Dataset:
    """Read a point file.

    CSV: one point per row with a fixed column count. A first row is a header
    when it ends in ``label`` or has a non-numeric field before its last one;
    a header ending in ``label`` marks a label column. Without a header the last column holds labels when
    ``labels`` is True, or when ``labels`` is None and any of its fields is
    non-numeric.

    Args:
        path: File path.
        fmt: ``csv`` or ``npz``; inferred from the suffix when omitted.
        labels: Force the presence (True) or absence (False) of a label column.
        name: Dataset name; defaults to the file stem.

    Raises:
        PointFileError: Missing file, ragged rows or non-numeric coordinates.
    """
    path = Path(path)
    if not path.exists():
        raise PointFileError("file not found", path)
    name = name or path.stem
    if _resolve_format(path, fmt) == "npz":
        return _load_npz(path, name)

    with open(path, newline="", encoding="utf-8") as f:
        rows = [(i + 1, row) for i, row in enumerate(csv.reader(f)) if row and any(s.strip() for s in row)]
    if not rows:
        raise PointFileError("no data rows", path)

    has_labels = labels
    first_line, first = rows[0]
    if _is_header(first):
        if has_labels is None:
            has_labels = first[-1].strip().lower() == LABEL_COLUMN
        rows = rows[1:]
        if not rows:
            raise PointFileError("no data rows after header", path, first_line)

    width = len(rows[0][1])
    for line, row in rows:
        if len(row) != width:
            raise PointFileError(f"expected {width} fields, got {len(row)}", path, line)
    if has_labels is None:
        has_labels = width > 1 and any(not _is_number(row[-1]) for _, row in rows)

    n_coords = width - 1 if has_labels else width
    if n_coords < 1:
        raise PointFileError("no coordinate columns", path)
    points = np.empty((len(rows), n_coords), dtype=np.float64)
    for r, (line, row) in enumerate(rows):
        try:
            points[r] = [float(s) for s in row[:n_coords]]
        except ValueError as e:
            raise PointFileError(f"non-numeric coordinate: {e}", path, line) from e
        if not np.all(np.isfinite(points[r])):
            raise PointFileError("NaN or Inf coordinate", path, line)

    if not has_labels:
        return Dataset(points=points, name=name)
    codes, names = encode_labels([row[-1] for _, row in rows])
    return Dataset(points=points, labels=codes, name=name, label_names=names)


def _load_npz(path: Path, name: str) -> Dataset:
    try:
        with np.load(path, allow_pickle=False) as archive:
            points = archive["points"]
            labels = archive["labels"] if "labels" in archive.files else None
            names = tuple(str(s) for s in archive["label_names"]) if "label_names" in archive.files else ()
    except (OSError, ValueError, KeyError) as e:
        raise PointFileError(f"unreadable npz archive: {e}", path) from e
    return Dataset(points=points, labels=labels, name=name, label_names=names)


def save_points(data: Dataset, path: Path | str, fmt: str | None = None) -> Path:
    """Write a dataset; CSV output has a header and a ``label`` column when labeled.

    Coordinates are written with 17 significant digits so they read back exactly.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if _resolve_format(path, fmt) == "npz":
        arrays: dict[str, np.ndarray] = {"points": data.points}
        if data.labels is not None:
            arrays["labels"] = data.labels
        if data.label_names:
            arrays["label_names"] = np.array(data.label_names, dtype=str)
        with open(path, "wb") as f:
            np.savez_compressed(f, **arrays)
        return path

    header = [f"x{j}" for j in range(data.dim)]
    label_strings = data.label_strings() if data.has_labels else None
    if label_strings is not None:
        header.append(LABEL_COLUMN)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for i, row in enumerate(data.points):
            fields = ["%.17g" % v for v in row]
            if label_strings is not None:
                fields.append(label_strings[i])
            writer.writerow(fields)
    return path


MEMBERSHIP_COLUMN = "membership"


def save_memberships(memberships: np.ndarray, path: Path | str) -> Path:
    """Write one center index per row, ``OUTLIER`` for discarded points."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow([MEMBERSHIP_COLUMN])
        for value in np.asarray(memberships).tolist():
            writer.writerow([OUTLIER_LABEL if value == OUTLIER else int(value)])
    return path


def load_memberships(path: Path | str) -> np.ndarray:
    """Read a membership file written by :func:`save_memberships`."""
    path = Path(path)
    if not path.exists():
        raise PointFileError("file not found", path)
    values: list[int] = []
    with open(path, newline="", encoding="utf-8") as f:
        for line, row in enumerate(csv.reader(f), start=1):
            if not row or (line == 1 and row[0].strip() == MEMBERSHIP_COLUMN):
                continue
            field = row[0].strip()
            if field in (OUTLIER_LABEL, str(OUTLIER)):
                values.append(OUTLIER)
                continue
            try:
                values.append(int(field))
            except ValueError as e:
                raise PointFileError(f"invalid membership '{field}'", path, line) from e
            if values[-1] < 0:
                raise PointFileError(f"invalid membership '{field}'", path, line)
    return np.asarray(values, dtype=np.int64)


def metadata_path(path: Path | str) -> Path:
    """Sidecar path ``<file>.meta.yaml``."""
    path = Path(path)
    return path.with_name(path.name + META_SUFFIX)


def write_metadata(path: Path | str, metadata: dict[str, Any]) -> Path:
    """Write the sidecar of a point file."""
    target = metadata_path(path)
    with open(target, "w", encoding="utf-8") as f:
        yaml.safe_dump(metadata, f, default_flow_style=False, sort_keys=False)
    return target


def read_metadata(path: Path | str) -> dict[str, Any] | None:
    """Read the sidecar of a point file, or None if absent."""
    target = metadata_path(path)
    if not target.exists():
        return None
    with open(target, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    return data if isinstance(data, dict) else None
