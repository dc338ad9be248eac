"""File-backed saved-scenario persistence.

A single JSON-lines file with an in-memory index.  Every mutation
rewrites the file to a temp path and renames it into place, so a crash
leaves either the old or the new file, never a torn one.  Writes go
through one lock (single-writer); reads serve from memory.

Updates use optimistic concurrency: the caller sends the `updated_at`
it last saw, and a mismatch means somebody else won the race — 409 at
the HTTP layer.
"""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from pathlib import Path

from .benefits import Overrides
from .errors import PensionLabError, ValidationError
from .salary import EmployeeProfile

MAX_NAME_LENGTH = 120


class UnknownScenarioError(PensionLabError):
    """No scenario with that id."""


class StaleUpdateError(PensionLabError):
    """The scenario changed since the caller last read it."""


@dataclass(frozen=True, slots=True)
class SavedScenario:
    id: str
    name: str
    profile: EmployeeProfile
    overrides: Overrides
    created_at: str
    updated_at: str

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "profile": self.profile.to_json(),
            "overrides": self.overrides.to_json(),
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SavedScenario":
        return cls(
            id=obj["id"],
            name=obj["name"],
            profile=EmployeeProfile.from_json(obj["profile"], field="profile"),
            overrides=Overrides.from_json(obj.get("overrides", {}), field="overrides"),
            created_at=obj["created_at"],
            updated_at=obj["updated_at"],
        )


def _validate_name(name: object) -> str:
    if not isinstance(name, str):
        raise ValidationError.single("name", "must be a string")
    if not name.strip():
        raise ValidationError.single("name", "must be non-empty")
    if len(name) > MAX_NAME_LENGTH:
        raise ValidationError.single("name", f"must be at most {MAX_NAME_LENGTH} characters")
    return name


class ScenarioStore:
    """Crash-safe scenario persistence over one JSON-lines file."""

    def __init__(self, path: str | Path):
        self._path = Path(path)
        self._lock = threading.Lock()
        self._scenarios: dict[str, SavedScenario] = {}
        self._load()

    def _load(self) -> None:
        if not self._path.exists():
            return
        with self._path.open(encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                record = SavedScenario.from_json(json.loads(line))
                self._scenarios[record.id] = record

    def _persist(self) -> None:
        self._path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(
            prefix=self._path.name, suffix=".tmp", dir=self._path.parent
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                for record in self._scenarios.values():
                    handle.write(json.dumps(record.to_json(), sort_keys=True))
                    handle.write("\n")
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp_path, self._path)
        except BaseException:
            try:
                os.unlink(tmp_path)
            except OSError:
                pass
            raise

    @staticmethod
    def _timestamp(after: str | None = None) -> str:
        now = datetime.now(timezone.utc)
        if after is not None:
            floor = datetime.fromisoformat(after) + timedelta(microseconds=1)
            if now < floor:
                now = floor
        return now.isoformat(timespec="microseconds")

    def create(self, name: object, profile: EmployeeProfile, overrides: Overrides) -> SavedScenario:
        name = _validate_name(name)
        with self._lock:
            scenario_id = secrets.token_urlsafe(9)
            while scenario_id in self._scenarios:  # pragma: no cover - astronomically rare
                scenario_id = secrets.token_urlsafe(9)
            stamp = self._timestamp()
            record = SavedScenario(
                id=scenario_id,
                name=name,
                profile=profile,
                overrides=overrides,
                created_at=stamp,
                updated_at=stamp,
            )
            self._scenarios[scenario_id] = record
            self._persist()
            return record

    def get(self, scenario_id: str) -> SavedScenario:
        with self._lock:
            try:
                return self._scenarios[scenario_id]
            except KeyError:
                raise UnknownScenarioError(scenario_id) from None

    def list(self) -> list[SavedScenario]:
        with self._lock:
            return sorted(self._scenarios.values(), key=lambda s: s.updated_at, reverse=True)

    def update(
        self,
        scenario_id: str,
        expected_updated_at: str,
        *,
        name: object | None = None,
        profile: EmployeeProfile | None = None,
        overrides: Overrides | None = None,
    ) -> SavedScenario:
        if name is not None:
            name = _validate_name(name)
        with self._lock:
            current = self._scenarios.get(scenario_id)
            if current is None:
                raise UnknownScenarioError(scenario_id)
            if current.updated_at != expected_updated_at:
                raise StaleUpdateError(
                    f"scenario {scenario_id} changed at {current.updated_at}"
                )
            record = SavedScenario(
                id=current.id,
                name=name if name is not None else current.name,
                profile=profile if profile is not None else current.profile,
                overrides=overrides if overrides is not None else current.overrides,
                created_at=current.created_at,
                updated_at=self._timestamp(after=current.updated_at),
            )
            self._scenarios[scenario_id] = record
            self._persist()
            return record

    def delete(self, scenario_id: str) -> None:
        with self._lock:
            if scenario_id not in self._scenarios:
                raise UnknownScenarioError(scenario_id)
            del self._scenarios[scenario_id]
            self._persist()
