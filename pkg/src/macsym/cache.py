"""Build-once table cache with optional JSON persistence.

Tables are keyed by (kind, degree, binding key).  Readers take the fast path
through a plain dict lookup; a per-key lock makes concurrent requests for a
missing table wait for a single build.  The disk file carries a version tag
and is ignored wholesale on mismatch.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from pathlib import Path

CACHE_VERSION = "macsym-tables-1"
ENV_VAR = "MACSYM_CACHE"

log = logging.getLogger(__name__)


class TableCache:
    def __init__(self, path=None, enabled=True):
        self.path = Path(path) if path else None
        self.enabled = enabled
        self._mem = {}
        self._disk = {}
        self._dirty = False
        self._lock = threading.Lock()
        self._key_locks = {}
        if self.path and self.enabled:
            self._disk = _read(self.path)

    def _key_lock(self, key):
        with self._lock:
            return self._key_locks.setdefault(key, threading.Lock())

    def get_or_build(self, kind, degree, binding_key, build, encode=None, decode=None):
        key = (kind, degree, binding_key)
        hit = self._mem.get(key)
        if hit is not None:
            return hit
        with self._key_lock(key):
            hit = self._mem.get(key)
            if hit is not None:
                return hit
            skey = _skey(key)
            if self.enabled and decode is not None and skey in self._disk:
                value = decode(self._disk[skey])
            else:
                value = build()
                if self.enabled and encode is not None and self.path is not None:
                    with self._lock:
                        self._disk[skey] = encode(value)
                        self._dirty = True
            self._mem[key] = value
            return value

    def save(self):
        if not (self.path and self.enabled and self._dirty):
            return
        with self._lock:
            payload = {"version": CACHE_VERSION, "entries": self._disk}
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            self.path.parent.mkdir(parents=True, exist_ok=True)
            tmp.write_text(json.dumps(payload, sort_keys=True))
            os.replace(tmp, self.path)
            self._dirty = False

    def clear(self):
        with self._lock:
            self._mem.clear()
            self._disk.clear()
            self._dirty = False
        if self.path and self.path.exists():
            self.path.unlink()

    def stats(self) -> dict:
        kinds = {}
        for skey in self._disk:
            kind = skey.split("|", 1)[0]
            kinds[kind] = kinds.get(kind, 0) + 1
        return {"path": str(self.path) if self.path else None, "version": CACHE_VERSION,
                "enabled": self.enabled, "memory_entries": len(self._mem),
                "disk_entries": len(self._disk), "by_kind": kinds}


def _skey(key) -> str:
    kind, degree, binding_key = key
    return f"{kind}|{degree}|{binding_key}"


def _read(path: Path) -> dict:
    try:
        payload = json.loads(path.read_text())
    except FileNotFoundError:
        return {}
    except (OSError, ValueError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return {}
    if not isinstance(payload, dict) or payload.get("version") != CACHE_VERSION:
        log.info("cache %s has a different version; rebuilding", path)
        return {}
    entries = payload.get("entries")
    return entries if isinstance(entries, dict) else {}


_active = TableCache(os.environ.get(ENV_VAR))


def active() -> TableCache:
    return _active


def configure(path=None, enabled=True) -> TableCache:
    """Replace the process-wide cache (used by the CLI and by tests)."""
    global _active
    _active = TableCache(path, enabled)
    return _active
