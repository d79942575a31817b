"""On-disk result cache for CLI commands.

Entries are JSON files named by the SHA-256 of the canonical key
``(schema_version, verb, args)``.  Writes go through a temporary file and
``os.replace`` so concurrent writers never leave a partial entry.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

SCHEMA_VERSION = 1
ENV_VAR = "THETALIE_CACHE_DIR"


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, directory, engine_version: str):
        self.directory = Path(directory)
        self.engine_version = engine_version

    @classmethod
    def from_config(cls, directory, engine_version: str):
        directory = directory or os.environ.get(ENV_VAR)
        return cls(directory, engine_version) if directory else None

    def _path(self, verb: str, args: dict) -> Path:
        key = canonical([SCHEMA_VERSION, verb, args])
        return self.directory / (hashlib.sha256(key.encode()).hexdigest() + ".json")

    def get(self, verb: str, args: dict):
        path = self._path(verb, args)
        try:
            entry = json.loads(path.read_text())
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if entry.get("schema_version") != SCHEMA_VERSION or entry.get("key") != [verb, args]:
            return None
        return entry["value"]

    def put(self, verb: str, args: dict, value) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        entry = {"schema_version": SCHEMA_VERSION, "key": [verb, args], "value": value,
                 "engine_version": self.engine_version}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(canonical(entry))
            os.replace(tmp, self._path(verb, args))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
