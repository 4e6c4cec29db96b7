"""manifest.json of a bench directory: what ran, from which code, and how it ended."""

from __future__ import annotations

import hashlib
import json
import subprocess
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import sampleclust


def hash_document(doc: dict[str, Any]) -> str:
    """Stable short hash of a JSON-serializable document."""
    return hashlib.sha256(json.dumps(doc, sort_keys=True, default=str).encode()).hexdigest()[:16]


def _git(*args: str) -> str | None:
    try:
        return subprocess.check_output(["git", *args], stderr=subprocess.DEVNULL, text=True).strip()
    except (subprocess.CalledProcessError, FileNotFoundError):
        return None


@dataclass
class RunManifest:
    """State of one ``sclust bench`` invocation.

    ``status`` moves from ``running`` to ``completed`` (failed runs are counted, not
    fatal) or to ``failed`` when the bench itself aborts.
    """

    bench_id: str
    timestamp: str
    version: str
    git_commit: str = ""
    git_dirty: bool = False
    plan_hash: str = ""
    plan: dict[str, Any] = field(default_factory=dict)
    output_dir: str = ""
    artifacts: list[str] = field(default_factory=list)
    run_count: int = 0
    failed_count: int = 0
    duration_secs: float = 0.0
    status: str = "running"
    error: str = ""

    @classmethod
    def create(cls, plan: dict[str, Any], output_dir: Path | str) -> "RunManifest":
        started = datetime.now(timezone.utc).isoformat()
        plan_hash = hash_document(plan)
        commit = _git("rev-parse", "HEAD")
        return cls(
            bench_id=hashlib.sha256(f"{plan_hash}:{started}".encode()).hexdigest()[:12],
            timestamp=started,
            version=sampleclust.__version__,
            git_commit=commit or "",
            git_dirty=bool(commit and _git("status", "--porcelain")),
            plan_hash=plan_hash,
            plan=plan,
            output_dir=str(output_dir),
        )

    def add_artifact(self, path: Path | str) -> None:
        self.artifacts.append(str(path))

    def complete(self, run_count: int, failed_count: int, duration_secs: float) -> None:
        self.run_count, self.failed_count, self.duration_secs = run_count, failed_count, duration_secs
        self.status = "completed"

    def fail(self, error: str) -> None:
        self.status, self.error = "failed", error

    def save(self, path: Path | str) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(asdict(self), indent=2), encoding="utf-8")

    @classmethod
    def load(cls, path: Path | str) -> "RunManifest":
        return cls(**json.loads(Path(path).read_text(encoding="utf-8")))
