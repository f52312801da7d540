"""Canonical encodings shared across the package.

Everything that is signed, hashed, digested, exported to disk, or
compared across runs goes through these helpers, so byte representations
are stable across platforms and process invocations.
"""

from __future__ import annotations

import hashlib
import json
import struct
from typing import Any


def u8(n: int) -> bytes:
    return struct.pack(">B", n)


def u32(n: int) -> bytes:
    return struct.pack(">I", n)


def pack_bytes(b: bytes) -> bytes:
    return u32(len(b)) + b


def pack_str(s: str) -> bytes:
    return pack_bytes(s.encode("utf-8"))


def pack_seq(chunks: list[bytes]) -> bytes:
    return u32(len(chunks)) + b"".join(chunks)


class Reader:
    """Cursor over a length-prefixed binary record; truncation raises."""

    def __init__(self, data: bytes):
        self._data = data
        self._pos = 0

    def _take(self, n: int) -> bytes:
        if self._pos + n > len(self._data):
            raise ValueError("truncated record")
        out = self._data[self._pos : self._pos + n]
        self._pos += n
        return out

    def u8(self) -> int:
        return self._take(1)[0]

    def u32(self) -> int:
        return struct.unpack(">I", self._take(4))[0]

    def bytes(self) -> bytes:
        return self._take(self.u32())

    def str(self) -> str:
        return self.bytes().decode("utf-8")

    def remainder(self) -> bytes:
        out = self._data[self._pos :]
        self._pos = len(self._data)
        return out

    def done(self) -> bool:
        return self._pos == len(self._data)

    def expect_done(self) -> None:
        if not self.done():
            raise ValueError("trailing bytes in record")


def canonical(value: Any) -> bytes:
    """Type-tagged canonical encoding for hashing and digesting.

    Supports the value shapes that appear in envelopes, logs, and signed
    payloads: str, bytes, int, bool, None, lists/tuples, dicts with
    string keys, and objects exposing ``canonical_bytes()``.
    """
    if value is None:
        return b"N"
    if isinstance(value, bool):
        return b"T" if value else b"F"
    if isinstance(value, bytes):
        return b"B" + pack_bytes(value)
    if isinstance(value, str):
        return b"S" + pack_str(value)
    if isinstance(value, int):
        return b"I" + pack_str(str(value))
    if isinstance(value, (list, tuple)):
        return b"L" + pack_seq([canonical(v) for v in value])
    if isinstance(value, dict):
        items = sorted(value.items())
        return b"D" + pack_seq([canonical(k) + canonical(v) for k, v in items])
    cb = getattr(value, "canonical_bytes", None)
    if callable(cb):
        return b"O" + pack_bytes(cb())
    raise TypeError(f"no canonical encoding for {type(value).__name__}")


def render(value: Any) -> str:
    """Stable human-readable rendering used in logs and reports."""
    if isinstance(value, bytes):
        return value.hex()
    if isinstance(value, str):
        return value
    if isinstance(value, (int, bool)) or value is None:
        return str(value)
    cb = getattr(value, "canonical_bytes", None)
    if callable(cb):
        return cb().hex()
    return json_compact(value)


def digest16(value: Any) -> str:
    """Short content digest for equality/linkability checks in logs."""
    return hashlib.sha256(canonical(value)).hexdigest()[:32]


def json_compact(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
