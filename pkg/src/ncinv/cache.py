"""A small on-disk result cache for the command line front end.

Entries are JSON files keyed by (operation, parameters, schema version); a
hit must reproduce a fresh computation byte for byte, which the test suite
checks by rerunning commands with the cache disabled.  Writes go through a
temporary file and an atomic rename, so concurrent readers never observe a
partial entry.  Unreadable or mismatched entries are treated as misses and
rewritten.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

SCHEMA_VERSION = 1

ENV_CACHE_DIR = "NCINV_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ncinv"


class ResultCache:
    """JSON file cache under one directory; disabled instances are no-ops."""

    def __init__(self, directory: Path | str | None = None, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled

    def _path(self, operation: str, params: dict) -> Path:
        key = "_".join(f"{k}{params[k]}" for k in sorted(params))
        return self.directory / f"{operation}_{key}_v{SCHEMA_VERSION}.json"

    def lookup(self, operation: str, params: dict):
        if not self.enabled:
            return None
        path = self._path(operation, params)
        try:
            with open(path, encoding="utf-8") as handle:
                entry = json.load(handle)
        except (OSError, json.JSONDecodeError):
            return None
        if (
            entry.get("schema_version") != SCHEMA_VERSION
            or entry.get("operation") != operation
            or entry.get("params") != params
        ):
            return None
        return entry.get("result")

    def store(self, operation: str, params: dict, result) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(operation, params)
        entry = {
            "schema_version": SCHEMA_VERSION,
            "operation": operation,
            "params": params,
            "result": result,
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(entry, handle)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def fetch(self, operation: str, params: dict, compute):
        """Return the cached result or compute, store, and return it."""
        value = self.lookup(operation, params)
        if value is None:
            value = compute()
            self.store(operation, params, value)
        return value
