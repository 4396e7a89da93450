"""Optional on-disk persistence for memoized tables.

Set ``LITTLEWOOD_CACHE_DIR`` to a directory to reuse character tables and
transition matrices between runs. Files carry a schema tag; a file whose tag
does not match is ignored and rewritten.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

SCHEMA = "littlewood-tables/1"
ENV_VAR = "LITTLEWOOD_CACHE_DIR"


def cache_dir() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def load(name: str) -> Optional[Any]:
    root = cache_dir()
    if root is None:
        return None
    path = root / f"{name}.json"
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        return None
    return doc.get("data")


def store(name: str, data: Any) -> None:
    root = cache_dir()
    if root is None:
        return
    root.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=root, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump({"schema": SCHEMA, "data": data}, fh)
    os.replace(tmp, root / f"{name}.json")
