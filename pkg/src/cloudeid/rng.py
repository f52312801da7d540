"""Randomness sources.

Scenario runs must be bit-for-bit reproducible under a fixed seed, so all
randomness flows through :class:`Rng`, a SHA-256 counter DRBG. Labelled
child streams (``rng.child("sra-root")``) decouple independent consumers
from each other's draw order; without a seed the root is taken from the
operating system.
"""

from __future__ import annotations

import hashlib
import secrets

from .serialization import pack_bytes, pack_str, u32


def _seed_bytes(seed: int | str | bytes | None) -> bytes:
    if seed is None:
        return secrets.token_bytes(32)
    if isinstance(seed, bytes):
        return seed
    if isinstance(seed, int):
        return seed.to_bytes(16, "big", signed=True)
    return seed.encode("utf-8")


class Rng:
    """Deterministic byte stream with labelled sub-streams."""

    def __init__(self, root: bytes):
        self._root = hashlib.sha256(b"rng/v1" + pack_bytes(root)).digest()
        self._counter = 0
        self._buf = b""

    @classmethod
    def from_seed(cls, seed: int | str | bytes | None) -> "Rng":
        return cls(_seed_bytes(seed))

    def child(self, label: str) -> "Rng":
        """Independent stream; same (seed, label) always yields the same bytes."""
        return Rng(self._root + pack_str(label))

    def randbytes(self, n: int) -> bytes:
        while len(self._buf) < n:
            block = hashlib.sha256(self._root + u32(self._counter)).digest()
            self._counter += 1
            self._buf += block
        out, self._buf = self._buf[:n], self._buf[n:]
        return out

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs n > 0")
        nbytes = (n.bit_length() + 15) // 8
        while True:
            candidate = int.from_bytes(self.randbytes(nbytes), "big")
            limit = (256**nbytes // n) * n
            if candidate < limit:
                return candidate % n

    def randint_bits(self, bits: int) -> int:
        """Uniform integer with exactly `bits` bits (top bit set)."""
        if bits < 1:
            raise ValueError("bits must be >= 1")
        raw = int.from_bytes(self.randbytes((bits + 7) // 8), "big")
        raw &= (1 << bits) - 1
        return raw | (1 << (bits - 1))


def ensure_rng(rng: Rng | None) -> Rng:
    """System-entropy stream when the caller did not supply one."""
    return rng if rng is not None else Rng.from_seed(None)
