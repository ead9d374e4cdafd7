"""On-disk store for idempotents, one JSON file per (n, label, domain).

Each file holds the serialized element, a format version and the sha256 of
the element's canonical bytes.  Writes go through a temporary file and
``os.replace`` so readers never see a partial file; a checksum mismatch on
read raises CacheIntegrityError rather than silently recomputing.
"""
from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from pathlib import Path
from typing import Callable

from .algebra import Element
from .errors import CacheIntegrityError

FORMAT_VERSION = 1
ENV_VAR = "JMSYM_CACHE_DIR"


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, Path.home() / ".cache" / "jmsym"))


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


class IdempotentCache:
    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, n: int, label: str, domain: str) -> Path:
        safe = re.sub(r"[^A-Za-z0-9_.-]", "_", label)
        return self.directory / f"v{FORMAT_VERSION}_n{n}_{safe}_{domain}.json"

    def get(self, n: int, label: str, domain: str) -> Element | None:
        path = self.path(n, label, domain)
        if not path.exists():
            return None
        try:
            record = json.loads(path.read_text())
            payload = record["element"]
            ok = record.get("version") == FORMAT_VERSION and record.get("sha256") == _digest(payload)
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheIntegrityError(f"unreadable cache file {path}: {exc}") from exc
        if not ok:
            raise CacheIntegrityError(f"checksum or version mismatch in {path}")
        return Element.from_json(payload)

    def put(self, n: int, label: str, domain: str, element: Element) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = element.dumps()
        record = {"version": FORMAT_VERSION, "n": n, "label": label, "domain": domain,
                  "sha256": _digest(payload), "element": payload}
        path = self.path(n, label, domain)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(record, fh, sort_keys=True)
        os.replace(tmp, path)
        return path

    def get_or_compute(self, n: int, label: str, domain: str, compute: Callable[[], Element]) -> tuple[Element, bool]:
        """(element, served_from_cache)."""
        hit = self.get(n, label, domain)
        if hit is not None:
            return hit, True
        element = compute()
        self.put(n, label, domain, element)
        return element, False
