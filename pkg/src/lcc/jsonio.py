"""Canonical JSON I/O shared by the CLI.

Certificates are written in a canonical form -- sorted keys, sorted
vertex lists, compact separators, LF newline -- so byte-identical runs
produce byte-identical files and reports can hash them stably.
"""

from __future__ import annotations

import hashlib
import json
import sys

from .errors import MalformedInputError

__all__ = ["canonical_dumps", "write_json", "read_json", "sha256_file"]


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_json(path, obj):
    data = canonical_dumps(obj)
    if path == "-":
        sys.stdout.write(data)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)


def read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read JSON from {path}: {exc}") from exc


def sha256_file(path) -> str:
    if path == "-":
        return ""
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()
