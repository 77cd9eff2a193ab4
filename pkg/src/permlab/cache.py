"""On-disk JSON cache for expensive enumerations.

Entries are keyed by operation name, parameters and package version, so a
new release never reads stale results.  The directory is ``$PERMLAB_CACHE``
if set, else the platform's user cache directory.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Any, Callable

import platformdirs

VERSION = "0.1.0"


def cache_dir() -> Path:
    env = os.environ.get("PERMLAB_CACHE")
    return Path(env) if env else Path(platformdirs.user_cache_dir("permlab"))


def cache_key(op: str, params: dict) -> str:
    blob = json.dumps({"op": op, "params": params, "version": VERSION}, sort_keys=True)
    return f"{op}-{hashlib.sha256(blob.encode()).hexdigest()[:20]}"


def cached(op: str, params: dict, compute: Callable[[], Any], enabled: bool = True) -> Any:
    """Return the JSON-serializable result of ``compute()``, reusing a stored copy."""
    if not enabled:
        return compute()
    path = cache_dir() / f"{cache_key(op, params)}.json"
    if path.exists():
        try:
            return json.loads(path.read_text())["result"]
        except (json.JSONDecodeError, KeyError):
            pass  # unreadable entry: recompute and overwrite
    result = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"op": op, "params": params, "version": VERSION, "result": result}))
    tmp.replace(path)
    return result
