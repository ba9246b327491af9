"""Content-addressed on-disk cache for plethysm results.

Each entry lives in ``<root>/<h[:2]>/<h>.json`` where ``h`` is the sha256
of the canonical JSON of the key and the engine version.  Writes go to a
temporary file in the same directory followed by ``os.replace``, so a
reader sees either no file or a complete one.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from pathlib import Path

from ..charengine import ENGINE_VERSION

ENV_VAR = "SUPERMF_CACHE_DIR"


class CacheWarning(UserWarning):
    pass


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class DiskCache:
    """get/put store understood by ``charengine.set_disk_cache``."""

    def __init__(self, root: str | os.PathLike, version: str = ENGINE_VERSION):
        self.root = Path(root)
        self.version = version

    def path_for(self, key) -> Path:
        h = hashlib.sha256(canonical({"key": key, "engine_version": self.version}).encode()).hexdigest()
        return self.root / h[:2] / f"{h}.json"

    def get(self, key):
        path = self.path_for(key)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None
        except OSError as e:
            warnings.warn(f"cache read failed for {path}: {e}", CacheWarning, stacklevel=2)
            return None
        try:
            entry = json.loads(text)
            if entry["engine_version"] != self.version or entry["key"] != json.loads(canonical(key)):
                return None
            return entry["value"]
        except (ValueError, KeyError, TypeError) as e:
            warnings.warn(f"ignoring corrupt cache entry {path}: {e}", CacheWarning, stacklevel=2)
            return None

    def put(self, key, value) -> None:
        path = self.path_for(key)
        entry = canonical({"key": key, "value": value, "engine_version": self.version})
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    fh.write(entry)
                os.replace(tmp, path)
            except BaseException:
                Path(tmp).unlink(missing_ok=True)
                raise
        except OSError as e:
            warnings.warn(f"cache write failed for {path}: {e}", CacheWarning, stacklevel=2)


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "supermf"
