"""On-disk cache of JSON payloads keyed by operation and arguments.

Entries live under ``$KPCAT_CACHE_DIR`` (default ``.kpcat-cache``).  Each
file holds the key, the payload and a checksum of the payload; writes go to
a temporary file that is then renamed into place, so readers see either no
entry or a complete one.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable

CACHE_VERSION = 1


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


class Cache:
    def __init__(self, directory: str | os.PathLike | None = None, enabled: bool = True):
        if directory is None:
            directory = os.environ.get("KPCAT_CACHE_DIR", ".kpcat-cache")
        self.dir = Path(directory)
        self.enabled = enabled

    def key(self, op: str, args: dict) -> dict:
        return {"op": op, "args": args, "version": CACHE_VERSION}

    def path(self, key: dict) -> Path:
        return self.dir / f"{key['op']}-{_digest(_canonical(key))[:32]}.json"

    def get(self, op: str, args: dict):
        if not self.enabled:
            return None
        key = self.key(op, args)
        p = self.path(key)
        try:
            entry = json.loads(p.read_text())
        except (OSError, ValueError):
            return None
        if entry.get("key") != key:
            return None
        body = _canonical(entry.get("payload"))
        if entry.get("checksum") != _digest(body):
            return None
        return entry["payload"]

    def put(self, op: str, args: dict, payload) -> None:
        if not self.enabled:
            return
        key = self.key(op, args)
        entry = {"key": key, "payload": payload, "checksum": _digest(_canonical(payload))}
        self.dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(_canonical(entry))
            os.replace(tmp, self.path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def cached(self, op: str, args: dict, compute: Callable[[], object]):
        hit = self.get(op, args)
        if hit is not None:
            return hit
        payload = compute()
        # round-trip through JSON so cold and warm runs return the same thing
        payload = json.loads(_canonical(payload))
        self.put(op, args, payload)
        return payload
