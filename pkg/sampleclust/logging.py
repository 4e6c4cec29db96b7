"""Structured logging for sampleclust: rich console output or JSON lines."""

from __future__ import annotations

import json
import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import partialmethod
from pathlib import Path
from typing import Any, Literal

from rich.console import Console
from rich.logging import RichHandler

LogFormat = Literal["text", "json"]


@dataclass
class LogContext:
    """Where a record comes from: dataset, bench run and pipeline stage."""

    dataset: str | None = None
    run_id: str | None = None
    stage: str | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def fields(self) -> dict[str, Any]:
        out = {key: value for key in ("dataset", "run_id", "stage") if (value := getattr(self, key))}
        out.update(self.extra)
        return out


class JsonFormatter(logging.Formatter):
    """One JSON object per record; context and keyword fields become top-level keys."""

    def format(self, record: logging.LogRecord) -> str:
        entry: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        ctx: LogContext | None = getattr(record, "ctx", None)
        if ctx is not None:
            entry.update(ctx.fields())
        entry.update(getattr(record, "extra_fields", None) or {})
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


def _json_file_handler(path: Path | str) -> logging.FileHandler:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setFormatter(JsonFormatter())
    return handler


class SCLogger:
    """Logger taking keyword fields, e.g. ``logger.info("sampled", size=2000)``."""

    def __init__(
        self,
        name: str = "sampleclust",
        level: int = logging.INFO,
        format_type: LogFormat = "text",
        log_file: Path | str | None = None,
    ) -> None:
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)
        self.logger.handlers.clear()
        self.logger.propagate = False
        self.context = LogContext()

        if format_type == "json":
            console: logging.Handler = logging.StreamHandler(sys.stderr)
            console.setFormatter(JsonFormatter())
        else:
            console = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
        self.logger.addHandler(console)
        if log_file:
            self.logger.addHandler(_json_file_handler(log_file))

    def log(self, level: int, msg: str, ctx: LogContext | None = None, **fields: Any) -> None:
        """Emit ``msg`` with a context (default: the logger's own) and extra fields."""
        if not self.logger.isEnabledFor(level):
            return
        record = self.logger.makeRecord(self.logger.name, level, "", 0, msg, (), None)
        record.ctx = ctx or self.context
        record.extra_fields = fields
        self.logger.handle(record)

    debug = partialmethod(log, logging.DEBUG)
    info = partialmethod(log, logging.INFO)
    warning = partialmethod(log, logging.WARNING)
    error = partialmethod(log, logging.ERROR)

    @contextmanager
    def timed(self, name: str, **fields: Any) -> Iterator[dict[str, float]]:
        """Time a block; the yielded dict receives ``seconds`` on exit."""
        timing: dict[str, float] = {}
        start = time.perf_counter()
        try:
            yield timing
        finally:
            timing["seconds"] = time.perf_counter() - start
            self.debug(f"{name} completed", latency_ms=round(timing["seconds"] * 1000, 2), **fields)

    @contextmanager
    def capture(self, path: Path | str) -> Iterator[Path]:
        """Also write JSON lines to ``path`` while the block runs."""
        handler = _json_file_handler(path)
        self.logger.addHandler(handler)
        try:
            yield Path(path)
        finally:
            self.logger.removeHandler(handler)
            handler.close()


_logger: SCLogger | None = None


def get_logger() -> SCLogger:
    """Return the process-wide logger, creating a default one on first use."""
    global _logger
    if _logger is None:
        _logger = SCLogger()
    return _logger


def configure_logging(
    level: int = logging.INFO,
    format_type: LogFormat = "text",
    log_file: Path | str | None = None,
) -> SCLogger:
    """Replace the process-wide logger."""
    global _logger
    _logger = SCLogger(level=level, format_type=format_type, log_file=log_file)
    return _logger
